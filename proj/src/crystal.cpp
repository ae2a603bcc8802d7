#include "lattes/crystal.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace lattes {

std::string case_str(CaseId id) {
    switch (id) {
        case CaseId::G1: return "G1";
        case CaseId::G2: return "G2";
        case CaseId::G3: return "G3";
        case CaseId::G4: return "G4";
        case CaseId::G5: return "G5";
        case CaseId::G6: return "G6";
    }
    return "?";
}

std::optional<CaseId> parse_case(const std::string& s) {
    for (CaseId id : {CaseId::G1, CaseId::G2, CaseId::G3, CaseId::G4, CaseId::G5, CaseId::G6})
        if (case_str(id) == s) return id;
    return std::nullopt;
}

namespace {

CMat2 antidiag(const Cyclo& top, const Cyclo& bottom) {
    return {Cyclo::zero(), top, bottom, Cyclo::zero()};
}

CMat2 diag(const Cyclo& a, const Cyclo& d) { return {a, Cyclo::zero(), Cyclo::zero(), d}; }

}  // namespace

CrystalGroup CrystalGroup::enumerate(CaseId id) {
    CrystalGroup g;
    g.id_ = id;
    const Cyclo one = Cyclo::one();
    const Cyclo zeta = Cyclo::zeta6();
    const Cyclo zeta2 = zeta * zeta;
    const Cyclo i = Cyclo::i();
    const TVec2 no_shift{};

    switch (id) {
        case CaseId::G1: {
            g.lattice_ = Lattice2::l2_tau();
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(-one, -one), no_shift},
                             {diag(-one, one), no_shift}};
            g.generator_names_ = {"u", "v", "w"};
            break;
        }
        case CaseId::G2: {
            g.lattice_ = Lattice2::l2_zeta();
            auto inv2 = *zeta2.inverse();
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(zeta2, inv2), no_shift},
                             {diag(zeta2, one), no_shift}};
            g.generator_names_ = {"u", "v", "w"};
            break;
        }
        case CaseId::G3: {
            g.lattice_ = Lattice2::l2_i();
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(i, -i), no_shift},
                             {diag(i, one), no_shift}};
            g.generator_names_ = {"u", "s", "t"};
            break;
        }
        case CaseId::G4: {
            g.lattice_ = Lattice2::l2_zeta();
            auto zinv = *zeta.inverse();
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(zeta, zinv), no_shift},
                             {diag(zeta, one), no_shift}};
            g.generator_names_ = {"u", "s", "t"};
            break;
        }
        case CaseId::G5: {
            g.lattice_ = Lattice2::l2_i();
            Cyclo half_1pi = (one + i) * Cyclo(Rational(1, 2));
            TVec2 h{TauPoly(half_1pi), TauPoly(half_1pi)};
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(i, -i), no_shift},
                             {diag(-one, one), no_shift},
                             {antidiag(-one, -one), h}};
            g.generator_names_ = {"u", "s", "w", "t"};
            break;
        }
        case CaseId::G6: {
            g.lattice_ = Lattice2::lambda6();
            auto inv2 = *zeta2.inverse();
            g.generators_ = {{antidiag(one, one), no_shift},
                             {antidiag(zeta2, inv2), no_shift}};
            g.generator_names_ = {"u", "v"};
            break;
        }
    }

    g.close_under_multiplication();
    return g;
}

CrystalGroup CrystalGroup::g6_new_coords() {
    CrystalGroup g;
    g.id_ = CaseId::G6;
    g.lattice_ = Lattice2::l2_tau();
    const Cyclo one = Cyclo::one();
    g.generators_ = {{CMat2{-one, -one, Cyclo::zero(), one}, TVec2{}},
                     {antidiag(one, one), TVec2{}}};
    g.generator_names_ = {"u", "v"};
    g.close_under_multiplication();
    return g;
}

void CrystalGroup::close_under_multiplication() {
    for (auto& gen : generators_) {
        auto red = lattice_.reduce_exact(gen.translation);
        if (!red) throw std::runtime_error("generator translation outside rational span");
        gen.translation = *red;
    }
    std::set<GroupElement> seen;
    std::deque<GroupElement> queue;
    GroupElement id = identity();
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        GroupElement cur = queue.front();
        queue.pop_front();
        for (const auto& gen : generators_) {
            GroupElement next = multiply(cur, gen);
            if (seen.insert(next).second) {
                if (seen.size() > 1000)
                    throw std::runtime_error("group closure exceeded 1000 elements");
                queue.push_back(next);
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
}

GroupElement CrystalGroup::identity() const {
    return {diag(Cyclo::one(), Cyclo::one()), TVec2{}};
}

GroupElement CrystalGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    // (A|r)(B|s) = (AB | As + r)
    GroupElement out;
    out.matrix = a.matrix * b.matrix;
    TMat2 at = to_tau(a.matrix);
    out.translation = at.apply(b.translation) + a.translation;
    auto red = lattice_.reduce_exact(out.translation);
    if (!red) throw std::runtime_error("product translation outside rational span");
    out.translation = *red;
    return out;
}

int CrystalGroup::order_mod_lattice(const GroupElement& g, int guard) const {
    GroupElement acc = g;
    GroupElement id = identity();
    for (int n = 1; n <= guard; ++n) {
        if (acc.matrix == id.matrix && lattice_.congruent(acc.translation, id.translation))
            return n;
        acc = multiply(acc, g);
    }
    throw std::runtime_error("order_mod_lattice: guard exceeded");
}

int CrystalGroup::exact_affine_order(const GroupElement& g, int guard) {
    CMat2 m = g.matrix;
    TMat2 mt = to_tau(g.matrix);
    TVec2 t = g.translation;
    CMat2 id = diag(Cyclo::one(), Cyclo::one());
    for (int n = 1; n <= guard; ++n) {
        if (m == id && t.x.is_zero() && t.y.is_zero()) return n;
        t = mt.apply(t) + g.translation;
        m = m * g.matrix;
    }
    return 0;
}

int CrystalGroup::matrix_order(const CMat2& m, int guard) {
    CMat2 id = diag(Cyclo::one(), Cyclo::one());
    CMat2 acc = m;
    for (int n = 1; n <= guard; ++n) {
        if (acc == id) return n;
        acc = acc * m;
    }
    throw std::runtime_error("matrix_order: guard exceeded (matrix not of finite order?)");
}

std::vector<GroupElement> CrystalGroup::elements_with_matrix(const CMat2& m) const {
    std::vector<GroupElement> out;
    for (const auto& e : elements_)
        if (e.matrix == m) out.push_back(e);
    return out;
}

std::vector<GroupElement> CrystalGroup::elements_with_matrix_order(int n) const {
    std::vector<GroupElement> out;
    for (const auto& e : elements_)
        if (matrix_order(e.matrix) == n) out.push_back(e);
    return out;
}

std::optional<GroupElement> CrystalGroup::word(const std::string& w) const {
    GroupElement acc = identity();
    for (char ch : w) {
        int idx = -1;
        for (size_t k = 0; k < generator_names_.size(); ++k)
            if (generator_names_[k] == std::string(1, ch)) idx = static_cast<int>(k);
        if (idx >= 0) {
            acc = multiply(acc, generators_[static_cast<size_t>(idx)]);
            continue;
        }
        if (ch == 'v') {
            // v = antidiag(-1,-1) is an element of every case even where it
            // is not a listed generator
            GroupElement v{antidiag(-Cyclo::one(), -Cyclo::one()), TVec2{}};
            acc = multiply(acc, v);
            continue;
        }
        return std::nullopt;
    }
    return acc;
}

}  // namespace lattes
