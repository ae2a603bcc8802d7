#include "lattes/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lattes {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Cyclo::Cyclo(const Rational& q) { c_[0] = q; }
Cyclo::Cyclo(long long n) { c_[0] = n; }

Cyclo Cyclo::zeta24_pow(long long k) {
    k %= 24;
    if (k < 0) k += 24;
    Cyclo r;
    // z^12 = -1, z^8 = z^4 - 1
    Rational sign = 1;
    if (k >= 12) {
        sign = -1;
        k -= 12;
    }
    if (k < 8) {
        r.c_[static_cast<size_t>(k)] = sign;
    } else {  // k in {8,...,11}: z^k = z^(k-4) - z^(k-8)
        r.c_[static_cast<size_t>(k - 4)] = sign;
        r.c_[static_cast<size_t>(k - 8)] = -sign;
    }
    return r;
}

Cyclo Cyclo::i() { return zeta24_pow(6); }
Cyclo Cyclo::zeta6() { return zeta24_pow(4); }

Cyclo Cyclo::sqrt2() {
    // z^3 + z^-3 with z^-3 = z^21 = z - z^5
    Cyclo r = zeta24_pow(3);
    r += zeta24_pow(1);
    r -= zeta24_pow(5);
    return r;
}

Cyclo Cyclo::sqrt3() {
    // z^2 + z^-2 with z^-2 = z^22 = z^2 - z^6
    Cyclo r = zeta24_pow(2);
    r += zeta24_pow(2);
    r -= zeta24_pow(6);
    return r;
}

Cyclo Cyclo::sqrt3_i() {
    Cyclo r = zeta6();
    r += zeta6();
    r -= one();
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t k = 1; k < 8; ++k)
        if (c_[k] != 0) return false;
    return true;
}

std::optional<Rational> Cyclo::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r;
    for (size_t k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (size_t k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (size_t k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    std::array<Rational, 15> prod{};
    for (size_t a = 0; a < 8; ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < 8; ++b) {
            if (o.c_[b] == 0) continue;
            prod[a + b] += c_[a] * o.c_[b];
        }
    }
    // reduce with x^8 = x^4 - 1, from the top down
    for (size_t k = 14; k >= 8; --k) {
        if (prod[k] == 0) continue;
        prod[k - 4] += prod[k];
        prod[k - 8] -= prod[k];
        prod[k] = 0;
    }
    for (size_t k = 0; k < 8; ++k) c_[k] = prod[k];
    return *this;
}

Cyclo Cyclo::conj() const {
    // complex conjugation sends z^k to z^(24-k)
    Cyclo r;
    for (size_t k = 0; k < 8; ++k) {
        if (c_[k] == 0) continue;
        Cyclo image = zeta24_pow(static_cast<long long>(24 - k) % 24);
        for (size_t j = 0; j < 8; ++j) r.c_[j] += c_[k] * image.c_[j];
    }
    return r;
}

Rational Cyclo::norm_squared() const {
    Cyclo n = (*this) * conj();
    auto q = n.as_rational();
    if (!q) {
        // |x|^2 is always real but can leave Q inside Q(zeta_24); the call
        // sites here only use it for elements where it is rational.
        throw std::runtime_error("norm_squared: not rational for this element");
    }
    return *q;
}

std::optional<Cyclo> Cyclo::inverse() const {
    if (is_zero()) return std::nullopt;
    // Solve (this) * x = 1 as an 8x8 rational linear system: column j of M
    // is the basis expansion of this * z^j.
    Rational M[8][9];
    for (int j = 0; j < 8; ++j) {
        Cyclo col = (*this) * zeta24_pow(j);
        for (int r = 0; r < 8; ++r) M[r][j] = col.coeff(r);
    }
    for (int r = 0; r < 8; ++r) M[r][8] = (r == 0) ? Rational(1) : Rational(0);
    // Gaussian elimination
    int row = 0;
    for (int col = 0; col < 8 && row < 8; ++col) {
        int piv = -1;
        for (int r = row; r < 8; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < 9; ++j) std::swap(M[piv][j], M[row][j]);
        Rational inv_p = Rational(1) / M[row][col];
        for (int j = col; j < 9; ++j) M[row][j] *= inv_p;
        for (int r = 0; r < 8; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (int j = col; j < 9; ++j) M[r][j] -= f * M[row][j];
        }
        ++row;
    }
    // multiplication by a nonzero field element is invertible, so row == 8
    Cyclo x;
    for (int k = 0; k < 8; ++k) x.coeff(k) = M[k][8];
    return x;
}

std::complex<double> Cyclo::numeric() const {
    const double theta = std::numbers::pi / 12.0;
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < 8; ++k) {
        if (c_[k] == 0) continue;
        double v = static_cast<double>(c_[k]);
        acc += v * std::complex<double>(std::cos(theta * static_cast<double>(k)),
                                        std::sin(theta * static_cast<double>(k)));
    }
    return acc;
}

std::string Cyclo::str() const {
    std::string s = "[";
    for (size_t k = 0; k < 8; ++k) {
        if (k) s += ',';
        s += rational_str(c_[k]);
    }
    return s + "]";
}

std::optional<Cyclo> Cyclo::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
    std::string body = s.substr(1, s.size() - 2);
    Cyclo r;
    size_t pos = 0;
    for (int k = 0; k < 8; ++k) {
        size_t comma = body.find(',', pos);
        std::string piece = (comma == std::string::npos) ? body.substr(pos)
                                                         : body.substr(pos, comma - pos);
        auto q = parse_rational(piece);
        if (!q) return std::nullopt;
        r.coeff(k) = *q;
        if (comma == std::string::npos) {
            if (k != 7) return std::nullopt;
            pos = body.size();
        } else {
            pos = comma + 1;
        }
    }
    if (pos != body.size() && pos != body.size() + 1) return std::nullopt;
    return r;
}

// --- TauPoly ---

TauPoly::TauPoly(const Cyclo& c) {
    if (!c.is_zero()) c_.push_back(c);
}

TauPoly TauPoly::tau() {
    TauPoly t;
    t.c_.resize(2);
    t.c_[1] = Cyclo::one();
    return t;
}

int TauPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

Cyclo TauPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Cyclo::zero();
    return c_[static_cast<size_t>(k)];
}

std::optional<Cyclo> TauPoly::as_cyclo() const {
    if (c_.empty()) return Cyclo::zero();
    if (c_.size() == 1) return c_[0];
    return std::nullopt;
}

void TauPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TauPoly TauPoly::operator-() const {
    TauPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

TauPoly& TauPoly::operator*=(const TauPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Cyclo> prod(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) prod[a + b] += c_[a] * o.c_[b];
    }
    c_ = std::move(prod);
    trim();
    return *this;
}

std::optional<std::complex<double>> TauPoly::numeric(
    std::optional<std::complex<double>> tau_value) const {
    if (degree() >= 1 && !tau_value) return std::nullopt;
    std::complex<double> t = tau_value.value_or(std::complex<double>(0.0, 0.0));
    std::complex<double> acc(0.0, 0.0);
    for (int k = degree(); k >= 0; --k) acc = acc * t + coeff(k).numeric();
    return acc;
}

std::string TauPoly::str() const {
    if (c_.empty()) return Cyclo::zero().str();
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) s += " + ";
        s += c_[k].str();
        if (k == 1) s += " t";
        if (k > 1) s += " t^" + std::to_string(k);
    }
    return s;
}

std::optional<TauPoly> TauPoly::parse(const std::string& s) {
    TauPoly out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t open = s.find('[', pos);
        if (open == std::string::npos) break;
        size_t close = s.find(']', open);
        if (close == std::string::npos) return std::nullopt;
        auto c = Cyclo::parse(s.substr(open, close - open + 1));
        if (!c) return std::nullopt;
        size_t deg = 0;
        size_t rest = close + 1;
        while (rest < s.size() && s[rest] == ' ') ++rest;
        if (rest < s.size() && s[rest] == 't') {
            deg = 1;
            ++rest;
            if (rest < s.size() && s[rest] == '^') {
                size_t end = rest + 1;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                deg = static_cast<size_t>(std::stoul(s.substr(rest + 1, end - rest - 1)));
                rest = end;
            }
        }
        if (out.c_.size() <= deg) out.c_.resize(deg + 1);
        out.c_[deg] += *c;
        pos = rest;
        size_t plus = s.find('+', pos);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    out.trim();
    return out;
}

}  // namespace lattes
