#pragma once

// Rank-4 lattices in C^2 with exact membership, congruence and reduction.
// Generators have TauPoly coordinates so the generic-tau lattices L^2(tau)
// and Lambda_6 are handled by coefficient matching: the tau powers and the
// zeta_24 basis elements are treated as independent rational coordinates.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lattes/cyclo.hpp"
#include "lattes/linalg.hpp"

namespace lattes {

template <class K>
struct Vec2T {
    K x{}, y{};
    friend Vec2T operator+(const Vec2T& a, const Vec2T& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2T operator-(const Vec2T& a, const Vec2T& b) { return {a.x - b.x, a.y - b.y}; }
    Vec2T operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2T& a, const Vec2T& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2T& a, const Vec2T& b) { return !(a == b); }
    friend bool operator<(const Vec2T& a, const Vec2T& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

template <class K>
struct Mat2T {
    K a{}, b{}, c{}, d{};
    friend Mat2T operator+(const Mat2T& m, const Mat2T& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend Mat2T operator-(const Mat2T& m, const Mat2T& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    friend Mat2T operator*(const Mat2T& m, const Mat2T& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    Mat2T operator-() const { return {-a, -b, -c, -d}; }
    friend bool operator==(const Mat2T& m, const Mat2T& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const Mat2T& m, const Mat2T& n) { return !(m == n); }
    friend bool operator<(const Mat2T& m, const Mat2T& n) {
        if (m.a != n.a) return m.a < n.a;
        if (m.b != n.b) return m.b < n.b;
        if (m.c != n.c) return m.c < n.c;
        return m.d < n.d;
    }
    K det() const { return a * d - b * c; }
    Vec2T<K> apply(const Vec2T<K>& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

using CVec2 = Vec2T<Cyclo>;
using TVec2 = Vec2T<TauPoly>;
using CMat2 = Mat2T<Cyclo>;
using TMat2 = Mat2T<TauPoly>;

TVec2 to_tau(const CVec2& v);
TMat2 to_tau(const CMat2& m);
std::optional<CMat2> inverse(const CMat2& m);
CMat2 scale(const Cyclo& s, const CMat2& m);
CMat2 mat_pow(const CMat2& m, int n);

class Lattice2 {
public:
    enum class Name { L2_tau, L2_i, L2_zeta, Lambda6, Custom };

    static Lattice2 l2_tau();
    static Lattice2 l2_i();
    static Lattice2 l2_zeta();
    static Lattice2 lambda6();
    static Lattice2 custom(std::array<TVec2, 4> gens, TauPoly factor_unit);

    Name name() const { return name_; }
    std::string name_str() const;
    const std::array<TVec2, 4>& generators() const { return gens_; }

    // The "tau" of the underlying rank-2 factor L(tau): the formal tau, i,
    // or zeta_6 depending on the lattice.
    const TauPoly& factor_unit() const { return factor_unit_; }

    // Exact rational coordinates of v in the generator basis, if v lies in
    // the rational span of the generators.
    std::optional<std::array<Rational, 4>> rational_coords(const TVec2& v) const;

    bool contains(const TVec2& v) const;
    bool congruent(const TVec2& v, const TVec2& w) const;

    // Canonical representative with generator coordinates in [0,1).
    // Requires v in the rational span of the generators.
    std::optional<TVec2> reduce_exact(const TVec2& v) const;

    // Integer matrix of the action of M on the generators, if M maps the
    // lattice into itself.
    std::optional<IntMat> integer_action(const CMat2& m) const;
    bool preserved_by(const CMat2& m) const { return integer_action(m).has_value(); }

    // Nearest-integer reduction in generator coordinates; ties at .5 round
    // toward -infinity. Needs a concrete tau for the generic-tau lattices.
    std::array<std::complex<double>, 2> reduce_numeric(
        const std::array<std::complex<double>, 2>& z,
        std::optional<std::complex<double>> tau_value = std::nullopt) const;

    TVec2 combination(const std::array<long long, 4>& n) const;

private:
    Lattice2(Name name, std::array<TVec2, 4> gens, TauPoly factor_unit);
    bool uses_formal_tau() const;

    Name name_ = Name::Custom;
    std::array<TVec2, 4> gens_{};
    TauPoly factor_unit_;
};

// Residue classes e mod L = Z + unit*Z with (1 - mu) e in L, as exact
// scalars; the count equals |1 - mu|^2. Throws when mu == 1.
std::vector<TauPoly> residue_solutions(const TauPoly& unit, const Cyclo& mu);

// Single-factor versions of membership/congruence for L = Z + unit*Z.
bool factor_contains(const TauPoly& unit, const TauPoly& e);
bool factor_congruent(const TauPoly& unit, const TauPoly& e, const TauPoly& f);

}  // namespace lattes
