#include "lattes/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace lattes {

TVec2 to_tau(const CVec2& v) { return {TauPoly(v.x), TauPoly(v.y)}; }
TMat2 to_tau(const CMat2& m) { return {TauPoly(m.a), TauPoly(m.b), TauPoly(m.c), TauPoly(m.d)}; }

std::optional<CMat2> inverse(const CMat2& m) {
    Cyclo det = m.det();
    auto inv = det.inverse();
    if (!inv) return std::nullopt;
    return CMat2{m.d * *inv, -m.b * *inv, -m.c * *inv, m.a * *inv};
}

CMat2 scale(const Cyclo& s, const CMat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

CMat2 mat_pow(const CMat2& m, int n) {
    CMat2 r{Cyclo::one(), Cyclo::zero(), Cyclo::zero(), Cyclo::one()};
    for (int k = 0; k < n; ++k) r = r * m;
    return r;
}

Lattice2::Lattice2(Name name, std::array<TVec2, 4> gens, TauPoly factor_unit)
    : name_(name), gens_(std::move(gens)), factor_unit_(std::move(factor_unit)) {}

Lattice2 Lattice2::l2_tau() {
    TauPoly t = TauPoly::tau();
    TauPoly one(Cyclo::one());
    TauPoly z;
    return Lattice2(Name::L2_tau, {TVec2{one, z}, TVec2{t, z}, TVec2{z, one}, TVec2{z, t}}, t);
}

Lattice2 Lattice2::l2_i() {
    TauPoly iu(Cyclo::i());
    TauPoly one(Cyclo::one());
    TauPoly z;
    return Lattice2(Name::L2_i, {TVec2{one, z}, TVec2{iu, z}, TVec2{z, one}, TVec2{z, iu}}, iu);
}

Lattice2 Lattice2::l2_zeta() {
    TauPoly zu(Cyclo::zeta6());
    TauPoly one(Cyclo::one());
    TauPoly z;
    return Lattice2(Name::L2_zeta, {TVec2{one, z}, TVec2{zu, z}, TVec2{z, one}, TVec2{z, zu}}, zu);
}

Lattice2 Lattice2::lambda6() {
    // L(tau)(-1,1)^T + L(tau)(zeta^2, zeta)^T
    TauPoly t = TauPoly::tau();
    Cyclo zeta = Cyclo::zeta6();
    Cyclo zeta2 = zeta * zeta;
    TVec2 g1{TauPoly(-Cyclo::one()), TauPoly(Cyclo::one())};
    TVec2 g2{-t, t};
    TVec2 g3{TauPoly(zeta2), TauPoly(zeta)};
    TVec2 g4{t * TauPoly(zeta2), t * TauPoly(zeta)};
    return Lattice2(Name::Lambda6, {g1, g2, g3, g4}, t);
}

Lattice2 Lattice2::custom(std::array<TVec2, 4> gens, TauPoly factor_unit) {
    return Lattice2(Name::Custom, std::move(gens), std::move(factor_unit));
}

std::string Lattice2::name_str() const {
    switch (name_) {
        case Name::L2_tau: return "L2_tau";
        case Name::L2_i: return "L2_i";
        case Name::L2_zeta: return "L2_zeta";
        case Name::Lambda6: return "Lambda6";
        case Name::Custom: return "custom";
    }
    return "?";
}

bool Lattice2::uses_formal_tau() const {
    for (const auto& g : gens_)
        if (g.x.degree() >= 1 || g.y.degree() >= 1) return true;
    return false;
}

namespace {

// Flatten a TVec2 into rational coordinates indexed by
// (coordinate, tau power, zeta_24 basis index).
std::vector<Rational> flatten(const TVec2& v, int max_deg) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(2 * (max_deg + 1) * 8));
    for (const TauPoly* comp : {&v.x, &v.y})
        for (int d = 0; d <= max_deg; ++d)
            for (int k = 0; k < 8; ++k) out.push_back(comp->coeff(d).coeff(k));
    return out;
}

}  // namespace

std::optional<std::array<Rational, 4>> Lattice2::rational_coords(const TVec2& v) const {
    int max_deg = std::max({v.x.degree(), v.y.degree(), 0});
    for (const auto& g : gens_) max_deg = std::max({max_deg, g.x.degree(), g.y.degree()});

    std::vector<std::vector<Rational>> cols;
    for (const auto& g : gens_) cols.push_back(flatten(g, max_deg));
    std::vector<Rational> rhs = flatten(v, max_deg);

    const size_t rows = rhs.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(4));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < 4; ++c) a[r][c] = cols[c][r];

    auto sol = solve_unique(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    return std::array<Rational, 4>{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

bool Lattice2::contains(const TVec2& v) const {
    auto c = rational_coords(v);
    if (!c) return false;
    for (const auto& q : *c)
        if (denominator(q) != 1) return false;
    return true;
}

bool Lattice2::congruent(const TVec2& v, const TVec2& w) const { return contains(v - w); }

std::optional<TVec2> Lattice2::reduce_exact(const TVec2& v) const {
    auto c = rational_coords(v);
    if (!c) return std::nullopt;
    TVec2 out = v;
    for (size_t k = 0; k < 4; ++k) {
        BigInt fl = numerator((*c)[k]) / denominator((*c)[k]);
        if ((*c)[k] < 0 && fl * denominator((*c)[k]) != numerator((*c)[k])) fl -= 1;
        if (fl == 0) continue;
        Cyclo f{Rational(fl)};
        out.x -= TauPoly(f) * gens_[k].x;
        out.y -= TauPoly(f) * gens_[k].y;
    }
    return out;
}

std::optional<IntMat> Lattice2::integer_action(const CMat2& m) const {
    TMat2 mt = to_tau(m);
    IntMat act(4, std::vector<BigInt>(4, 0));
    for (size_t j = 0; j < 4; ++j) {
        auto coords = rational_coords(mt.apply(gens_[j]));
        if (!coords) return std::nullopt;
        for (size_t r = 0; r < 4; ++r) {
            if (denominator((*coords)[r]) != 1) return std::nullopt;
            act[r][j] = numerator((*coords)[r]);
        }
    }
    return act;
}

std::array<std::complex<double>, 2> Lattice2::reduce_numeric(
    const std::array<std::complex<double>, 2>& z,
    std::optional<std::complex<double>> tau_value) const {
    if (uses_formal_tau() && !tau_value)
        throw std::invalid_argument("reduce_numeric: tau value required");

    // real 4x4 system: z = sum c_k g_k over R
    double a[4][5];
    std::array<std::complex<double>, 2> gnum[4];
    for (size_t k = 0; k < 4; ++k) {
        gnum[k] = {*gens_[k].x.numeric(tau_value), *gens_[k].y.numeric(tau_value)};
        a[0][k] = gnum[k][0].real();
        a[1][k] = gnum[k][0].imag();
        a[2][k] = gnum[k][1].real();
        a[3][k] = gnum[k][1].imag();
    }
    a[0][4] = z[0].real();
    a[1][4] = z[0].imag();
    a[2][4] = z[1].real();
    a[3][4] = z[1].imag();

    for (int col = 0, row = 0; col < 4 && row < 4; ++col) {
        int piv = row;
        for (int r = row + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14)
            throw std::runtime_error("reduce_numeric: degenerate lattice basis");
        for (int j = 0; j < 5; ++j) std::swap(a[piv][j], a[row][j]);
        double p = a[row][col];
        for (int j = col; j < 5; ++j) a[row][j] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == row) continue;
            double f = a[r][col];
            for (int j = col; j < 5; ++j) a[r][j] -= f * a[row][j];
        }
        ++row;
    }
    std::array<std::complex<double>, 2> out = z;
    for (size_t k = 0; k < 4; ++k) {
        double n = std::floor(a[k][4] + 0.5);
        if (a[k][4] + 0.5 == n) n -= 1.0;  // tie rounds toward -inf
        out[0] -= n * gnum[k][0];
        out[1] -= n * gnum[k][1];
    }
    return out;
}

TVec2 Lattice2::combination(const std::array<long long, 4>& n) const {
    TVec2 out;
    for (size_t k = 0; k < 4; ++k) {
        TauPoly f{Cyclo(n[k])};
        out.x += f * gens_[k].x;
        out.y += f * gens_[k].y;
    }
    return out;
}

bool factor_contains(const TauPoly& unit, const TauPoly& e) {
    // e = m + n*unit with m, n integers: coefficient matching over
    // (tau power, basis index) with two unknowns.
    int max_deg = std::max({e.degree(), unit.degree(), 0});
    auto flatten1 = [max_deg](const TauPoly& p) {
        std::vector<Rational> out;
        for (int d = 0; d <= max_deg; ++d)
            for (int k = 0; k < 8; ++k) out.push_back(p.coeff(d).coeff(k));
        return out;
    };
    std::vector<Rational> one_col = flatten1(TauPoly(Cyclo::one()));
    std::vector<Rational> unit_col = flatten1(unit);
    std::vector<Rational> rhs = flatten1(e);
    std::vector<std::vector<Rational>> a(rhs.size(), std::vector<Rational>(2));
    for (size_t r = 0; r < rhs.size(); ++r) {
        a[r][0] = one_col[r];
        a[r][1] = unit_col[r];
    }
    auto sol = solve_unique(std::move(a), std::move(rhs));
    if (!sol) return false;
    return denominator((*sol)[0]) == 1 && denominator((*sol)[1]) == 1;
}

bool factor_congruent(const TauPoly& unit, const TauPoly& e, const TauPoly& f) {
    return factor_contains(unit, e - f);
}

std::vector<TauPoly> residue_solutions(const TauPoly& unit, const Cyclo& mu) {
    Cyclo one_minus_mu = Cyclo::one() - mu;
    auto inv = one_minus_mu.inverse();
    if (!inv) throw std::invalid_argument("residue_solutions: mu == 1");

    Rational norm = one_minus_mu.norm_squared();
    if (norm <= 0 || denominator(norm) != 1)
        throw std::invalid_argument("residue_solutions: |1-mu|^2 not a positive integer");
    long long count = static_cast<long long>(numerator(norm));

    // e = (m + n*unit) / (1 - mu); candidates with 0 <= m, n < count cover
    // all classes of L / (1-mu)L.
    std::vector<TauPoly> reps;
    TauPoly inv_t{*inv};
    for (long long m = 0; m < count && static_cast<long long>(reps.size()) < count; ++m) {
        for (long long n = 0; n < count && static_cast<long long>(reps.size()) < count; ++n) {
            TauPoly e = inv_t * (TauPoly(Cyclo(m)) + TauPoly(Cyclo(n)) * unit);
            bool fresh = true;
            for (const auto& r : reps)
                if (factor_congruent(unit, e, r)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(e);
        }
    }
    if (static_cast<long long>(reps.size()) != count)
        throw std::runtime_error("residue_solutions: enumeration incomplete");
    return reps;
}

}  // namespace lattes
