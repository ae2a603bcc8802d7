#pragma once

// Exact homogeneous polynomial maps on P^1, P^1 x P^1 and P^2 with Cyclo
// coefficients: arithmetic, composition, Jacobians, exact divisibility,
// line restrictions/resultants, and the Ueda lift through pi_2.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattes/lattice.hpp"

namespace lattes {

using ExpVec = std::vector<int>;

class HomoPoly {
public:
    HomoPoly() = default;
    HomoPoly(std::vector<std::string> vars, int degree);  // zero of given degree

    static HomoPoly variable(const std::vector<std::string>& vars, size_t index);
    static HomoPoly constant(const std::vector<std::string>& vars, const Cyclo& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree_ == 0 || is_zero(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Cyclo>& terms() const { return terms_; }

    void set_term(const ExpVec& e, const Cyclo& c);
    Cyclo coeff(const ExpVec& e) const;
    // leading term in the lex order on exponent vectors (graded-lex, since
    // all terms share the total degree)
    std::pair<ExpVec, Cyclo> leading_term() const;

    HomoPoly operator-() const;
    HomoPoly& operator+=(const HomoPoly& o);
    HomoPoly& operator-=(const HomoPoly& o);
    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
    friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
    friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
    friend HomoPoly operator*(const Cyclo& s, const HomoPoly& p);
    friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomoPoly& a, const HomoPoly& b) { return !(a == b); }

    HomoPoly pow(int n) const;
    HomoPoly derivative(size_t var_index) const;

    // substitute args[i] for variable i; all args share a variable list
    HomoPoly substitute(const std::vector<HomoPoly>& args) const;

    // exact quotient this / divisor, nullopt when the division leaves a
    // remainder (single-divisor reduction in graded-lex order)
    std::optional<HomoPoly> divide_exact(const HomoPoly& divisor) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    std::string str() const;  // terms as "[coeff vector] x^a y^b z^c"
    static std::optional<HomoPoly> parse(const std::string& line,
                                         const std::vector<std::string>& vars);

private:
    std::vector<std::string> vars_;
    int degree_ = -1;
    std::map<ExpVec, Cyclo> terms_;
};

struct HomogeneousMap {
    std::vector<HomoPoly> components;

    int degree() const { return components.empty() ? -1 : components[0].degree(); }
    const std::vector<std::string>& vars() const { return components[0].vars(); }

    // divide every coefficient by the first nonzero coefficient (component
    // order, then graded-lex) so triples compare canonically
    HomogeneousMap normalized() const;

    friend bool operator==(const HomogeneousMap& a, const HomogeneousMap& b) {
        return a.components == b.components;
    }

    std::string str() const;  // one component per line
    static std::optional<HomogeneousMap> parse(const std::string& text,
                                               const std::vector<std::string>& vars);
};

HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g);
HomogeneousMap iterate_map(const HomogeneousMap& f, int n);
HomoPoly jacobian_det(const HomogeneousMap& f);

// Are the two maps equal up to one overall scalar?
bool proportional(const HomogeneousMap& f, const HomogeneousMap& g);

// Restriction of F to the line s*p + t*q: binary form coefficients
// c[k] s^k t^(d-k).
std::vector<Cyclo> restrict_to_line(const HomoPoly& f, const std::vector<Cyclo>& p,
                                    const std::vector<Cyclo>& q);

// Homogeneous resultant of two binary forms (coefficient vectors of length
// deg+1); zero iff they share a projective root.
Cyclo binary_resultant(const std::vector<Cyclo>& u, const std::vector<Cyclo>& v);

// Certificate that two components share no positive-degree factor: some
// rational line restriction has nonzero resultant. Tries `attempts` lines.
bool no_common_factor(const HomoPoly& f, const HomoPoly& g, int attempts = 20);

// The unique P^2 map f with f . pi2 = pi2 . (g,g), solved exactly over the
// monomial basis. Throws when the symmetric linear system is inconsistent.
HomogeneousMap ueda_lift(const HomogeneousMap& g);

// (g, g) on P^1 x P^1 in the variables (xi, eta, xip, etap).
HomogeneousMap product_square(const HomogeneousMap& g);

// numeric projective helpers
std::vector<std::complex<double>> proj_eval(const HomogeneousMap& f,
                                            const std::vector<std::complex<double>>& p);
double proj_distance(const std::vector<std::complex<double>>& p,
                     const std::vector<std::complex<double>>& q);

// Parse an expression over +,-,*,^,() with atoms: rationals, i, zeta,
// sqrt2, sqrt3, and the given variables. Homogeneity is enforced by HomoPoly
// addition, so the expression must be homogeneous.
HomoPoly parse_poly_expr(const std::string& expr, const std::vector<std::string>& vars);

// Same grammar with atom `tau` and no variables, producing a TauPoly.
std::optional<TauPoly> parse_scalar_expr(const std::string& expr);

}  // namespace lattes
