#include "lattes/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lattes {

namespace {

const Cyclo kZero = Cyclo::zero();
const Cyclo kOne = Cyclo::one();

CMat2 diag(const Cyclo& a, const Cyclo& d) { return {a, kZero, kZero, d}; }
CMat2 antidiag(const Cyclo& b, const Cyclo& c) { return {kZero, b, c, kZero}; }
CMat2 ident() { return diag(kOne, kOne); }

std::vector<CMat2> build_table(CaseId id, bool new_coords) {
    const Cyclo i = Cyclo::i();
    const Cyclo z = Cyclo::zeta6();
    const Cyclo z2 = z * z;
    const Cyclo zi = *z.inverse();
    const Cyclo z2i = *z2.inverse();
    switch (id) {
        case CaseId::G1:
            return {{kOne, kOne, kOne, -kOne},   {kOne, -kOne, kOne, kOne},
                    {kOne, kOne, -kOne, kOne},   {kOne, -kOne, -kOne, -kOne},
                    ident(),                     diag(kOne, -kOne),
                    antidiag(kOne, kOne),        antidiag(kOne, -kOne)};
        case CaseId::G2:
            return {ident(),          diag(kOne, z2i),      diag(kOne, z2),
                    antidiag(kOne, kOne), antidiag(kOne, z2i), antidiag(kOne, z2)};
        case CaseId::G3:
            return {ident(),           diag(kOne, -kOne),   antidiag(kOne, kOne),
                    antidiag(kOne, -kOne), diag(kOne, -i),  diag(kOne, i),
                    antidiag(kOne, -i),    antidiag(kOne, i)};
        case CaseId::G4:
            return {ident(),            diag(kOne, -kOne),   antidiag(kOne, kOne),
                    antidiag(kOne, -kOne), diag(kOne, zi),   diag(kOne, z),
                    antidiag(kOne, zi),    antidiag(kOne, z), diag(kOne, z2i),
                    diag(kOne, z2),        antidiag(kOne, z2i), antidiag(kOne, z2)};
        case CaseId::G5:
            return {{kOne, kOne, kOne, -kOne},  {kOne, -kOne, kOne, kOne},
                    {kOne, kOne, -kOne, kOne},  {kOne, -kOne, -kOne, -kOne},
                    {kOne, -i, i, -kOne},       {kOne, -i, -i, kOne},
                    {kOne, i, i, kOne},         {kOne, i, -i, -kOne},
                    {kOne, i, kOne, -i},        {kOne, -i, kOne, i},
                    {kOne, i, -kOne, i},        {kOne, -i, -kOne, -i},
                    {kOne, kOne, i, -i},        {kOne, -kOne, i, i},
                    {kOne, kOne, -i, i},        {kOne, -kOne, -i, -i},
                    ident(),                    diag(kOne, -kOne),
                    antidiag(kOne, kOne),       antidiag(kOne, -kOne),
                    diag(kOne, -i),             diag(kOne, i),
                    antidiag(kOne, -i),         antidiag(kOne, i)};
        case CaseId::G6:
            if (!new_coords)
                return {ident(),          diag(kOne, z2i),      diag(kOne, z2),
                        antidiag(kOne, kOne), antidiag(kOne, z2i), antidiag(kOne, z2)};
            return {ident(),
                    {zi, zi, -zi, kZero},
                    {kZero, -z, z, z},
                    {-kOne, -kOne, kZero, kOne},
                    {-zi, kZero, zi, zi},
                    {kZero, -z, -z, kZero}};
    }
    return {};
}

}  // namespace

const std::vector<CMat2>& classification_table(CaseId id, bool new_coords) {
    static std::map<std::pair<int, bool>, std::vector<CMat2>> cache;
    auto key = std::make_pair(static_cast<int>(id), new_coords);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_table(id, new_coords)).first;
    return it->second;
}

Cyclo case_residue_relation(CaseId id, bool new_coords) {
    const Cyclo z = Cyclo::zeta6();
    switch (id) {
        case CaseId::G1: return -kOne;
        case CaseId::G2: return z * z;
        case CaseId::G3: return Cyclo::i();
        case CaseId::G4: return z;
        case CaseId::G5: return Cyclo::i();
        case CaseId::G6:
            if (new_coords) return Cyclo(-2);
            throw std::invalid_argument("G6 in original coordinates has per-type conditions");
    }
    throw std::invalid_argument("bad case");
}

CMat2 normalize_family(const CMat2& m) {
    for (const Cyclo* entry : {&m.a, &m.b, &m.c, &m.d}) {
        if (entry->is_zero()) continue;
        Cyclo inv = *entry->inverse();
        return scale(inv, m);
    }
    return m;
}

bool scalar_preserves_lattice(const Cyclo& a, const Lattice2& lattice) {
    TauPoly at{a};
    for (const auto& g : lattice.generators())
        if (!lattice.contains({at * g.x, at * g.y})) return false;
    return true;
}

DescendsResult descends(const AffineTorusMap& map, const CrystalGroup& group) {
    DescendsResult out;
    const Lattice2& lat = group.lattice();

    out.lattice_preserved = true;
    for (const auto& g : lat.generators())
        if (!lat.contains(map.matrix.apply(g))) out.lattice_preserved = false;
    if (!out.lattice_preserved) {
        out.failure = "matrix does not preserve the lattice";
        return out;
    }

    for (size_t k = 0; k < group.generators().size(); ++k) {
        const GroupElement& g = group.generators()[k];
        TMat2 bg = to_tau(g.matrix);
        TVec2 lhs_t = map.matrix.apply(g.translation) + map.translation;
        TMat2 lhs_m = map.matrix * bg;

        bool found = false;
        for (const GroupElement& h : group.elements()) {
            TMat2 rhs_m = to_tau(h.matrix) * map.matrix;
            if (!(lhs_m == rhs_m)) continue;
            TVec2 rhs_t = to_tau(h.matrix).apply(map.translation) + h.translation;
            if (!lat.congruent(lhs_t, rhs_t)) continue;
            out.assignment.push_back({group.generator_names()[k], h});
            found = true;
            break;
        }
        if (!found) {
            out.failure = "no image for generator " + group.generator_names()[k];
            out.assignment.clear();
            return out;
        }
    }
    out.ok = true;
    return out;
}

namespace {

// Nullspace of the stacked intertwiner system A*Bg = Cg*A over Q(zeta_24),
// unknowns (a,b,c,d).
std::vector<std::vector<Cyclo>> intertwiner_system(const std::vector<CMat2>& bs,
                                                   const std::vector<CMat2>& cs) {
    std::vector<std::vector<Cyclo>> rows;
    for (size_t k = 0; k < bs.size(); ++k) {
        const CMat2& B = bs[k];
        const CMat2& C = cs[k];
        rows.push_back({B.a - C.a, B.c, -C.b, kZero});
        rows.push_back({B.b, B.d - C.a, kZero, -C.b});
        rows.push_back({-C.c, kZero, B.a - C.d, B.c});
        rows.push_back({kZero, -C.c, B.b, B.d - C.d});
    }
    return rows;
}

std::optional<CMat2> solve_family(const std::vector<CMat2>& bs, const std::vector<CMat2>& cs) {
    auto basis = nullspace(intertwiner_system(bs, cs));
    if (basis.empty()) return std::nullopt;
    if (basis.size() > 1)
        throw std::runtime_error("intertwiner space of dimension > 1; unexpected for these groups");
    CMat2 m{basis[0][0], basis[0][1], basis[0][2], basis[0][3]};
    if (m.det().is_zero()) return std::nullopt;
    return normalize_family(m);
}

TVec2 rational_combination(const Lattice2& lat, const std::vector<Rational>& c) {
    TVec2 out;
    for (size_t k = 0; k < 4; ++k) {
        TauPoly f{Cyclo(c[k])};
        out.x += f * lat.generators()[k].x;
        out.y += f * lat.generators()[k].y;
    }
    return out;
}

// Solve the translation congruences (1 - C_g) r = r''_g mod Lambda over all
// translation-free generators, taking the union over the finitely many
// choices of image translation r''. Returns representatives mod Lambda.
std::vector<TVec2> translation_solutions(const CrystalGroup& group, const CMat2& shape) {
    const Lattice2& lat = group.lattice();
    auto inv_shape = inverse(shape);
    if (!inv_shape) return {};

    struct GenData {
        IntMat one_minus_c;             // 4x4 integer action
        std::vector<TVec2> image_shifts;  // candidate r'' reps
    };
    std::vector<GenData> data;
    for (size_t k = 0; k < group.generators().size(); ++k) {
        const GroupElement& g = group.generators()[k];
        if (!(g.translation.x.is_zero() && g.translation.y.is_zero()))
            continue;  // generators carrying translations are excluded here
        CMat2 c = shape * g.matrix * *inv_shape;
        auto action = lat.integer_action(c);
        if (!action) return {};
        auto images = group.elements_with_matrix(c);
        if (images.empty()) return {};
        GenData d;
        d.one_minus_c.assign(4, std::vector<BigInt>(4, 0));
        for (size_t r = 0; r < 4; ++r)
            for (size_t j = 0; j < 4; ++j)
                d.one_minus_c[r][j] = (r == j ? BigInt(1) : BigInt(0)) - (*action)[r][j];
        for (const auto& h : images) d.image_shifts.push_back(h.translation);
        data.push_back(std::move(d));
    }
    if (data.empty()) return {};

    std::set<std::vector<Rational>> solution_coords;
    std::vector<size_t> choice(data.size(), 0);
    while (true) {
        IntMat stacked;
        std::vector<Rational> rhs;
        bool valid = true;
        for (size_t k = 0; k < data.size() && valid; ++k) {
            const TVec2& shift = data[k].image_shifts[choice[k]];
            auto coords = lat.rational_coords(shift);
            if (!coords) {
                valid = false;
                break;
            }
            for (size_t r = 0; r < 4; ++r) {
                stacked.push_back(data[k].one_minus_c[r]);
                rhs.push_back((*coords)[r]);
            }
        }
        if (valid) {
            auto sols = solve_congruences_mod_one(stacked, rhs);
            if (sols.consistent && !sols.finite)
                throw std::runtime_error("translation solutions form a positive-dimensional family");
            for (auto& s : sols.solutions) solution_coords.insert(s);
        }
        size_t k = 0;
        for (; k < data.size(); ++k) {
            if (++choice[k] < data[k].image_shifts.size()) break;
            choice[k] = 0;
        }
        if (k == data.size()) break;
    }

    std::vector<TVec2> out;
    for (const auto& c : solution_coords) out.push_back(rational_combination(lat, c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<MatrixFamily> classify(CaseId id, bool g6_new_coords) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, bool>, std::vector<MatrixFamily>> cache;
    auto key = std::make_pair(static_cast<int>(id), g6_new_coords);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    CrystalGroup group = (id == CaseId::G6 && g6_new_coords) ? CrystalGroup::g6_new_coords()
                                                             : CrystalGroup::enumerate(id);
    const Lattice2& lat = group.lattice();

    // distinct candidate image matrices per generator, same matrix order
    std::vector<std::vector<CMat2>> candidates;
    for (const auto& g : group.generators()) {
        int order = CrystalGroup::matrix_order(g.matrix);
        std::set<CMat2> mats;
        for (const auto& e : group.elements())
            if (CrystalGroup::matrix_order(e.matrix) == order) mats.insert(e.matrix);
        candidates.emplace_back(mats.begin(), mats.end());
    }

    std::vector<CMat2> gen_mats;
    for (const auto& g : group.generators()) gen_mats.push_back(g.matrix);

    std::set<CMat2> shapes;
    std::vector<size_t> choice(candidates.size(), 0);
    while (true) {
        std::vector<CMat2> images;
        for (size_t k = 0; k < candidates.size(); ++k) images.push_back(candidates[k][choice[k]]);
        auto family = solve_family(gen_mats, images);
        if (family) shapes.insert(*family);

        size_t k = 0;
        for (; k < candidates.size(); ++k) {
            if (++choice[k] < candidates[k].size()) break;
            choice[k] = 0;
        }
        if (k == candidates.size()) break;
    }

    const auto& table = classification_table(id, g6_new_coords);
    std::vector<MatrixFamily> out;
    for (const CMat2& shape : shapes) {
        MatrixFamily fam;
        fam.case_id = id;
        fam.new_coords = g6_new_coords;
        fam.shape = shape;
        for (size_t k = 0; k < table.size(); ++k)
            if (normalize_family(table[k]) == shape) {
                fam.type_index = static_cast<int>(k) + 1;
                fam.table_shape = table[k];
            }
        fam.translation_classes = translation_solutions(group, shape);

        if (!(id == CaseId::G6 && !g6_new_coords)) {
            fam.r_condition.diagonal_form = true;
            fam.r_condition.mu = case_residue_relation(id, g6_new_coords);
            for (const auto& e : residue_solutions(lat.factor_unit(), fam.r_condition.mu)) {
                TVec2 rep{e, e};
                auto red = lat.reduce_exact(rep);
                fam.r_condition.residues.push_back(red ? *red : rep);
            }
            std::sort(fam.r_condition.residues.begin(), fam.r_condition.residues.end());
        } else {
            // original G6 coordinates: the per-type congruence pairs; the
            // solved classes are the condition
            fam.r_condition.diagonal_form = false;
            fam.r_condition.residues = fam.translation_classes;
        }
        out.push_back(std::move(fam));
    }
    std::sort(out.begin(), out.end(), [](const MatrixFamily& x, const MatrixFamily& y) {
        if (x.type_index != y.type_index) return x.type_index < y.type_index;
        return x.shape < y.shape;
    });
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, out);
    }
    return out;
}

std::vector<PowerIdentity> power_identities(CaseId id) {
    std::vector<PowerIdentity> out;
    if (id == CaseId::G5) {
        const auto& t = classification_table(CaseId::G5);
        const Cyclo i = Cyclo::i();
        const CMat2 j = antidiag(kOne, -kOne);      // (0 1; -1 0)
        const CMat2 u = antidiag(kOne, kOne);
        auto scalar_id = [&](int fam, int exp, const Cyclo& s, const CMat2& target) {
            PowerIdentity p;
            p.family = fam;
            p.exponent = exp;
            p.scalar = s;
            p.target = target;
            p.matrix_ok = (mat_pow(t[static_cast<size_t>(fam - 1)], exp) == scale(s, target));
            out.push_back(p);
        };
        auto family_id = [&](int fam, int exp, const Cyclo& s, int target_fam) {
            PowerIdentity p;
            p.family = fam;
            p.exponent = exp;
            p.scalar = s;
            p.target_family = target_fam;
            p.target = t[static_cast<size_t>(target_fam - 1)];
            p.matrix_ok = (mat_pow(t[static_cast<size_t>(fam - 1)], exp) == scale(s, p.target));
            out.push_back(p);
        };
        for (int f : {1, 4, 5, 8}) scalar_id(f, 2, Cyclo(2), ident());
        scalar_id(2, 2, Cyclo(-2), j);
        scalar_id(3, 2, Cyclo(2), j);
        scalar_id(6, 2, Cyclo(-2) * i, u);
        scalar_id(7, 2, Cyclo(2) * i, u);
        family_id(9, 2, kOne + i, 15);
        family_id(10, 2, kOne - i, 13);
        family_id(11, 2, kOne - i, 16);
        family_id(12, 2, kOne + i, 14);
        family_id(13, 2, kOne + i, 10);
        family_id(14, 2, kOne - i, 12);
        family_id(15, 2, kOne - i, 9);
        family_id(16, 2, kOne + i, 11);
        for (int f : {9, 12, 13, 16}) scalar_id(f, 3, Cyclo(2) * (kOne + i), ident());
        for (int f : {10, 11, 14, 15}) scalar_id(f, 3, Cyclo(2) * (kOne - i), ident());

        // the form of r is preserved under iteration: A r + r stays in the
        // diagonal residue family for every admissible scalar
        CrystalGroup group = CrystalGroup::enumerate(CaseId::G5);
        const Lattice2& lat = group.lattice();
        auto residues = residue_solutions(lat.factor_unit(), i);
        std::vector<Cyclo> scalars{kOne, kOne + i, Cyclo(2)};
        for (auto& p : out) {
            p.translation_form_preserved = true;
            const CMat2& b = t[static_cast<size_t>(p.family - 1)];
            for (const Cyclo& a : scalars) {
                CMat2 A = scale(a, b);
                if (!lat.integer_action(A)) continue;
                for (const auto& e : residues) {
                    TVec2 r{e, e};
                    TVec2 iter = r;
                    TMat2 At = to_tau(A);
                    for (int step = 1; step < p.exponent; ++step)
                        iter = At.apply(iter) + r;
                    bool in_family = false;
                    for (const auto& e2 : residues)
                        if (lat.congruent(iter, TVec2{e2, e2})) in_family = true;
                    if (!in_family) p.translation_form_preserved = false;
                }
            }
        }
        return out;
    }
    if (id == CaseId::G6) {
        const auto& t = classification_table(CaseId::G6, true);
        const int exponents[6] = {1, 3, 3, 2, 6, 6};
        CrystalGroup group = CrystalGroup::g6_new_coords();
        const Lattice2& lat = group.lattice();
        auto residues = residue_solutions(lat.factor_unit(), Cyclo(-2));
        for (int f = 1; f <= 6; ++f) {
            PowerIdentity p;
            p.family = f;
            p.exponent = exponents[f - 1];
            p.scalar = kOne;
            p.target = ident();
            p.matrix_ok = (mat_pow(t[static_cast<size_t>(f - 1)], p.exponent) == ident());
            p.translation_form_preserved = true;
            std::vector<Cyclo> pool;
            Cyclo zp = kOne;
            for (int j = 0; j < 6; ++j) {
                pool.push_back(zp);
                pool.push_back(Cyclo(2) * zp);
                zp *= Cyclo::zeta6();
            }
            for (const Cyclo& a : pool) {
                CMat2 A = scale(a, t[static_cast<size_t>(f - 1)]);
                if (!lat.integer_action(A)) continue;
                TMat2 At = to_tau(A);
                for (const auto& e : residues) {
                    TVec2 r{e, e};
                    TVec2 iter = r;
                    for (int step = 1; step < p.exponent; ++step)
                        iter = At.apply(iter) + r;
                    bool in_family = false;
                    for (const auto& e2 : residues)
                        if (lat.congruent(iter, TVec2{e2, e2})) in_family = true;
                    if (!in_family) p.translation_form_preserved = false;
                }
            }
            out.push_back(p);
        }
        return out;
    }
    return out;
}

CMat2 g6_basis_change() {
    const Cyclo z = Cyclo::zeta6();
    return {-kOne, z * z, kOne, z};
}

G6CoordinateChange g6_change_of_coordinates(const MatrixFamily& original) {
    if (original.case_id != CaseId::G6 || original.new_coords)
        throw std::invalid_argument("expects a G6 family in the original coordinates");
    G6CoordinateChange out;
    out.type_index = original.type_index;
    out.old_shape = original.shape;

    CMat2 p = g6_basis_change();
    CMat2 pinv = *inverse(p);
    out.new_shape = pinv * original.shape * p;

    const auto& table = classification_table(CaseId::G6, true);
    if (original.type_index >= 1 && original.type_index <= 6) {
        const CMat2& want = table[static_cast<size_t>(original.type_index - 1)];
        out.matches_table = (normalize_family(out.new_shape) == normalize_family(want));
    }

    // translations transport through r' = P^-1 r
    CrystalGroup new_group = CrystalGroup::g6_new_coords();
    const Lattice2& new_lat = new_group.lattice();
    auto new_families = classify(CaseId::G6, true);
    const MatrixFamily* target = nullptr;
    for (const auto& f : new_families)
        if (f.type_index == original.type_index) target = &f;
    if (target) {
        TMat2 pinv_t = to_tau(pinv);
        bool all_found = original.translation_classes.size() == target->translation_classes.size();
        for (const auto& r : original.translation_classes) {
            TVec2 mapped = pinv_t.apply(r);
            bool found = false;
            for (const auto& r2 : target->translation_classes)
                if (new_lat.congruent(mapped, r2)) found = true;
            if (!found) all_found = false;
        }
        out.translations_match = all_found;
    }

    out.residue_relation_ok =
        residue_solutions(TauPoly::tau(), Cyclo(-2)).size() == 9;
    return out;
}

}  // namespace lattes
