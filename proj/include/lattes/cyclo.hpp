#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_24) and in the
// polynomial ring Q(zeta_24)[tau], tau a formal indeterminate.
//
// Every algebraic constant used elsewhere (i, zeta_6, sqrt2, sqrt3,
// sqrt3*i) lives in Q(zeta_24); coordinates are kept in the power basis
// 1, z, ..., z^7 with z = exp(2*pi*i/24), Phi_24(x) = x^8 - x^4 + 1.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lattes {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string rational_str(const Rational& q);
std::optional<Rational> parse_rational(const std::string& s);

class Cyclo {
public:
    Cyclo() = default;
    explicit Cyclo(const Rational& q);
    explicit Cyclo(long long n);

    static Cyclo zeta24_pow(long long k);  // z^k, any k
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }
    static Cyclo i();       // z^6
    static Cyclo zeta6();   // z^4 = exp(2*pi*i/6)
    static Cyclo sqrt2();   // z^3 + z - z^5
    static Cyclo sqrt3();   // 2 z^2 - z^6
    static Cyclo sqrt3_i(); // 2 zeta6 - 1

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    Rational& coeff(int k) { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;  // only the z^0 coordinate may be nonzero
    std::optional<Rational> as_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    // total order for use as map keys; no arithmetic meaning
    friend bool operator<(const Cyclo& a, const Cyclo& b) { return a.c_ < b.c_; }

    Cyclo conj() const;                    // z -> z^-1
    std::optional<Cyclo> inverse() const;  // nullopt on zero
    Rational norm_squared() const;         // this * conj(this), must be rational

    std::complex<double> numeric() const;  // evaluate at z = exp(2*pi*i/24)

    // bracketed basis vector "[q0,q1,...,q7]"
    std::string str() const;
    static std::optional<Cyclo> parse(const std::string& s);

private:
    std::array<Rational, 8> c_{};  // value-initialized to 0
};

class TauPoly {
public:
    TauPoly() = default;
    TauPoly(const Cyclo& c);  // NOLINT: deliberate implicit embedding
    explicit TauPoly(const Rational& q) : TauPoly(Cyclo(q)) {}
    explicit TauPoly(long long n) : TauPoly(Cyclo(n)) {}

    static TauPoly tau();

    int degree() const;  // -1 for zero
    Cyclo coeff(int k) const;

    bool is_zero() const { return c_.empty(); }
    bool is_cyclo() const { return degree() <= 0; }
    std::optional<Cyclo> as_cyclo() const;

    TauPoly operator-() const;
    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    TauPoly& operator*=(const TauPoly& o);
    friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
    friend TauPoly operator*(TauPoly a, const TauPoly& b) { return a *= b; }
    friend bool operator==(const TauPoly& a, const TauPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TauPoly& a, const TauPoly& b) { return !(a == b); }
    friend bool operator<(const TauPoly& a, const TauPoly& b) { return a.c_ < b.c_; }

    // Fails (nullopt) when the value involves tau and no tau is supplied.
    std::optional<std::complex<double>> numeric(
        std::optional<std::complex<double>> tau_value = std::nullopt) const;

    std::string str() const;  // "[..]" or "[..] + [..] t + [..] t^2"
    static std::optional<TauPoly> parse(const std::string& s);

private:
    void trim();
    std::vector<Cyclo> c_;  // c_[k] * tau^k, no trailing zeros
};

}  // namespace lattes
