#include "lattes/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lattes {

HomoPoly::HomoPoly(std::vector<std::string> vars, int degree)
    : vars_(std::move(vars)), degree_(degree) {}

HomoPoly HomoPoly::variable(const std::vector<std::string>& vars, size_t index) {
    HomoPoly p(vars, 1);
    ExpVec e(vars.size(), 0);
    e[index] = 1;
    p.terms_[e] = Cyclo::one();
    return p;
}

HomoPoly HomoPoly::constant(const std::vector<std::string>& vars, const Cyclo& c) {
    HomoPoly p(vars, 0);
    if (!c.is_zero()) p.terms_[ExpVec(vars.size(), 0)] = c;
    return p;
}

void HomoPoly::set_term(const ExpVec& e, const Cyclo& c) {
    int total = 0;
    for (int x : e) total += x;
    if (degree_ < 0) degree_ = total;
    if (total != degree_) throw std::invalid_argument("set_term: degree mismatch");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

Cyclo HomoPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo::zero() : it->second;
}

std::pair<ExpVec, Cyclo> HomoPoly::leading_term() const {
    if (terms_.empty()) throw std::runtime_error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

HomoPoly HomoPoly::operator-() const {
    HomoPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (vars_ != o.vars_ || degree_ != o.degree_)
        throw std::invalid_argument("HomoPoly +: mixed degrees or variables");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& o) { return *this += -o; }

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("HomoPoly *: variable mismatch");
    if (a.is_zero() || b.is_zero())
        return HomoPoly(a.vars_, std::max(a.degree_ + b.degree_, -1));
    HomoPoly r(a.vars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            Cyclo prod = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!prod.is_zero()) r.terms_[e] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

HomoPoly operator*(const Cyclo& s, const HomoPoly& p) {
    if (s.is_zero()) return HomoPoly(p.vars_, p.degree_);
    HomoPoly r = p;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

HomoPoly HomoPoly::pow(int n) const {
    HomoPoly r = constant(vars_, Cyclo::one());
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

HomoPoly HomoPoly::derivative(size_t var_index) const {
    HomoPoly r(vars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        ExpVec d = e;
        d[var_index] -= 1;
        r.terms_[d] = Cyclo(e[var_index]) * c;
    }
    return r;
}

HomoPoly HomoPoly::substitute(const std::vector<HomoPoly>& args) const {
    if (args.size() != vars_.size()) throw std::invalid_argument("substitute: arity mismatch");
    const auto& tvars = args[0].vars();
    int adeg = args[0].degree();
    HomoPoly acc(tvars, degree_ * adeg);
    // memoized powers of each argument
    std::vector<std::vector<HomoPoly>> pows(args.size());
    for (size_t v = 0; v < args.size(); ++v)
        pows[v].push_back(HomoPoly::constant(tvars, Cyclo::one()));
    auto power = [&](size_t v, int k) -> const HomoPoly& {
        while (static_cast<int>(pows[v].size()) <= k)
            pows[v].push_back(pows[v].back() * args[v]);
        return pows[v][static_cast<size_t>(k)];
    };
    for (const auto& [e, c] : terms_) {
        HomoPoly term = HomoPoly::constant(tvars, c);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * power(v, e[v]);
        acc += term;
    }
    return acc;
}

std::optional<HomoPoly> HomoPoly::divide_exact(const HomoPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return HomoPoly(vars_, degree_ - divisor.degree_);
    if (degree_ < divisor.degree_) return std::nullopt;
    HomoPoly rem = *this;
    HomoPoly quot(vars_, degree_ - divisor.degree_);
    auto [dlm, dlc] = divisor.leading_term();
    Cyclo dlc_inv = *dlc.inverse();
    while (!rem.is_zero()) {
        auto [rlm, rlc] = rem.leading_term();
        ExpVec q(rlm.size());
        for (size_t k = 0; k < q.size(); ++k) {
            q[k] = rlm[k] - dlm[k];
            if (q[k] < 0) return std::nullopt;  // leading monomial not divisible
        }
        Cyclo qc = rlc * dlc_inv;
        HomoPoly qterm(vars_, rem.degree() - divisor.degree());
        qterm.terms_[q] = qc;
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

std::complex<double> HomoPoly::eval(const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.numeric();
        for (size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

std::string HomoPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.str();
        s += " *";
        for (size_t v = 0; v < vars_.size(); ++v)
            s += " " + vars_[v] + "^" + std::to_string(e[v]);
    }
    return s;
}

std::optional<HomoPoly> HomoPoly::parse(const std::string& line,
                                        const std::vector<std::string>& vars) try {
    if (line == "0") return HomoPoly(vars, -1);
    HomoPoly out;
    bool have = false;
    size_t pos = 0;
    while (pos < line.size()) {
        size_t open = line.find('[', pos);
        if (open == std::string::npos) break;
        size_t close = line.find(']', open);
        if (close == std::string::npos) return std::nullopt;
        auto c = Cyclo::parse(line.substr(open, close - open + 1));
        if (!c) return std::nullopt;
        size_t star = line.find('*', close);
        if (star == std::string::npos) return std::nullopt;
        ExpVec e(vars.size(), 0);
        size_t cursor = star + 1;
        for (size_t v = 0; v < vars.size(); ++v) {
            size_t at = line.find(vars[v] + "^", cursor);
            if (at == std::string::npos) return std::nullopt;
            size_t digits = at + vars[v].size() + 1;
            size_t end = digits;
            while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end])))
                ++end;
            e[v] = std::stoi(line.substr(digits, end - digits));
            cursor = end;
        }
        HomoPoly term;
        int total = 0;
        for (int x : e) total += x;
        if (!have) {
            out = HomoPoly(vars, total);
            have = true;
        }
        term = HomoPoly(vars, total);
        if (!c->is_zero()) term.set_term(e, *c);
        out += term;
        pos = cursor;
    }
    if (!have) return std::nullopt;
    return out;
} catch (const std::exception&) {
    return std::nullopt;
}

HomogeneousMap HomogeneousMap::normalized() const {
    for (const auto& comp : components) {
        for (const auto& [e, c] : comp.terms()) {
            (void)e;
            Cyclo inv = *c.inverse();
            HomogeneousMap out;
            for (const auto& comp2 : components) out.components.push_back(inv * comp2);
            return out;
        }
    }
    return *this;
}

std::string HomogeneousMap::str() const {
    std::string s;
    for (const auto& c : components) s += c.str() + "\n";
    return s;
}

std::optional<HomogeneousMap> HomogeneousMap::parse(const std::string& text,
                                                    const std::vector<std::string>& vars) {
    HomogeneousMap out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto p = HomoPoly::parse(line, vars);
        if (!p) return std::nullopt;
        out.components.push_back(*p);
    }
    if (out.components.empty()) return std::nullopt;
    return out;
}

HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g) {
    HomogeneousMap out;
    for (const auto& comp : f.components) out.components.push_back(comp.substitute(g.components));
    return out;
}

HomogeneousMap iterate_map(const HomogeneousMap& f, int n) {
    HomogeneousMap acc = f;
    for (int k = 1; k < n; ++k) acc = compose(f, acc);
    return acc;
}

HomoPoly jacobian_det(const HomogeneousMap& f) {
    if (f.components.size() != 3)
        throw std::invalid_argument("jacobian_det expects a P^2 map");
    HomoPoly j[3][3];
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) j[r][c] = f.components[r].derivative(c);
    HomoPoly det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                   j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                   j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    return det;
}

bool proportional(const HomogeneousMap& f, const HomogeneousMap& g) {
    if (f.components.size() != g.components.size()) return false;
    return f.normalized() == g.normalized();
}

std::vector<Cyclo> restrict_to_line(const HomoPoly& f, const std::vector<Cyclo>& p,
                                    const std::vector<Cyclo>& q) {
    std::vector<std::string> st{"s", "t"};
    std::vector<HomoPoly> lin;
    for (size_t v = 0; v < f.vars().size(); ++v) {
        HomoPoly l = p[v] * HomoPoly::variable(st, 0) + q[v] * HomoPoly::variable(st, 1);
        if (l.is_zero()) l = HomoPoly(st, 1);
        lin.push_back(l);
    }
    HomoPoly r = f.substitute(lin);
    std::vector<Cyclo> coeffs(static_cast<size_t>(f.degree()) + 1, Cyclo::zero());
    for (const auto& [e, c] : r.terms()) coeffs[static_cast<size_t>(e[0])] = c;
    return coeffs;
}

Cyclo binary_resultant(const std::vector<Cyclo>& u, const std::vector<Cyclo>& v) {
    // Sylvester matrix of binary forms of degrees m = |u|-1, n = |v|-1.
    const size_t m = u.size() - 1;
    const size_t n = v.size() - 1;
    const size_t dim = m + n;
    if (dim == 0) return Cyclo::one();
    std::vector<std::vector<Cyclo>> s(dim, std::vector<Cyclo>(dim, Cyclo::zero()));
    // rows: shifted copies of u (n rows) then v (m rows); coefficient of
    // s^k listed from highest power
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k <= m; ++k) s[r][r + k] = u[m - k];
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k <= n; ++k) s[n + r][r + k] = v[n - k];

    // determinant by elimination
    Cyclo det = Cyclo::one();
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && s[piv][col].is_zero()) ++piv;
        if (piv == dim) return Cyclo::zero();
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Cyclo inv = *s[col][col].inverse();
        for (size_t r = col + 1; r < dim; ++r) {
            if (s[r][col].is_zero()) continue;
            Cyclo f = s[r][col] * inv;
            for (size_t k = col; k < dim; ++k) s[r][k] -= f * s[col][k];
        }
    }
    return det;
}

bool no_common_factor(const HomoPoly& f, const HomoPoly& g, int attempts) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.degree() == 0 || g.degree() == 0) return true;
    // deterministic small-integer lines; a single nonzero resultant is an
    // exact certificate
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto draw = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<long long>(z % 11) - 5;
    };
    for (int trial = 0; trial < attempts; ++trial) {
        std::vector<Cyclo> p, q;
        for (size_t v = 0; v < f.vars().size(); ++v) {
            p.push_back(Cyclo(draw()));
            q.push_back(Cyclo(draw()));
        }
        auto fu = restrict_to_line(f, p, q);
        auto gv = restrict_to_line(g, p, q);
        bool fz = true, gz = true;
        for (const auto& c : fu)
            if (!c.is_zero()) fz = false;
        for (const auto& c : gv)
            if (!c.is_zero()) gz = false;
        if (fz || gz) continue;  // degenerate or contained line; resample
        if (!binary_resultant(fu, gv).is_zero()) return true;
    }
    return false;
}

HomogeneousMap ueda_lift(const HomogeneousMap& g) {
    if (g.components.size() != 2)
        throw std::invalid_argument("ueda_lift expects a P^1 map");
    const int d = g.degree();
    const std::vector<std::string> quad{"xi", "eta", "xip", "etap"};
    const std::vector<std::string> xyz{"x", "y", "z"};

    // relabel g into both factors
    std::vector<HomoPoly> first_args{HomoPoly::variable(quad, 0), HomoPoly::variable(quad, 1)};
    std::vector<HomoPoly> second_args{HomoPoly::variable(quad, 2), HomoPoly::variable(quad, 3)};
    auto relabel = [&](const HomoPoly& p, bool second) {
        return p.substitute(second ? second_args : first_args);
    };
    HomoPoly g1p = relabel(g.components[0], false);
    HomoPoly g2p = relabel(g.components[1], false);
    HomoPoly g1q = relabel(g.components[0], true);
    HomoPoly g2q = relabel(g.components[1], true);

    // targets: the three symmetric bidegree-(d,d) forms of pi2 . (g,g)
    HomoPoly targets[3] = {g1p * g2q + g1q * g2p, g1p * g1q, g2p * g2q};

    // basis: monomials x^a y^b z^c of degree d expanded through pi2
    HomoPoly px = HomoPoly::variable(quad, 0) * HomoPoly::variable(quad, 3) +
                  HomoPoly::variable(quad, 2) * HomoPoly::variable(quad, 1);
    HomoPoly py = HomoPoly::variable(quad, 0) * HomoPoly::variable(quad, 2);
    HomoPoly pz = HomoPoly::variable(quad, 1) * HomoPoly::variable(quad, 3);

    std::vector<ExpVec> monomials;
    std::vector<HomoPoly> basis;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            int c = d - a - b;
            monomials.push_back({a, b, c});
            basis.push_back(px.pow(a) * py.pow(b) * pz.pow(c));
        }

    // collect all exponent vectors appearing anywhere
    std::map<ExpVec, size_t> row_of;
    auto note_rows = [&row_of](const HomoPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            if (!row_of.count(e)) row_of.emplace(e, row_of.size());
        }
    };
    for (const auto& b : basis) note_rows(b);
    for (const auto& t : targets) note_rows(t);

    const size_t rows = row_of.size();
    std::vector<std::vector<Cyclo>> a(rows, std::vector<Cyclo>(basis.size(), Cyclo::zero()));
    for (size_t col = 0; col < basis.size(); ++col)
        for (const auto& [e, c] : basis[col].terms()) a[row_of[e]][col] = c;

    HomogeneousMap out;
    for (const auto& target : targets) {
        std::vector<Cyclo> rhs(rows, Cyclo::zero());
        for (const auto& [e, c] : target.terms()) rhs[row_of[e]] = c;
        auto sol = solve_unique(a, rhs);
        if (!sol)
            throw std::runtime_error("ueda_lift: symmetric form not expressible through pi2");
        HomoPoly comp(xyz, d);
        for (size_t k = 0; k < monomials.size(); ++k)
            if (!(*sol)[k].is_zero()) comp.set_term(monomials[k], (*sol)[k]);
        out.components.push_back(comp);
    }
    return out;
}

HomogeneousMap product_square(const HomogeneousMap& g) {
    if (g.components.size() != 2)
        throw std::invalid_argument("product_square expects a P^1 map");
    const std::vector<std::string> quad{"xi", "eta", "xip", "etap"};
    std::vector<HomoPoly> first{HomoPoly::variable(quad, 0), HomoPoly::variable(quad, 1)};
    std::vector<HomoPoly> second{HomoPoly::variable(quad, 2), HomoPoly::variable(quad, 3)};
    HomogeneousMap out;
    out.components.push_back(g.components[0].substitute(first));
    out.components.push_back(g.components[1].substitute(first));
    out.components.push_back(g.components[0].substitute(second));
    out.components.push_back(g.components[1].substitute(second));
    return out;
}

std::vector<std::complex<double>> proj_eval(const HomogeneousMap& f,
                                            const std::vector<std::complex<double>>& p) {
    std::vector<std::complex<double>> out;
    for (const auto& comp : f.components) out.push_back(comp.eval(p));
    double big = 0.0;
    for (const auto& z : out) big = std::max(big, std::abs(z));
    if (big == 0.0) throw std::runtime_error("proj_eval: image is the zero vector");
    for (auto& z : out) z /= big;
    return out;
}

double proj_distance(const std::vector<std::complex<double>>& p,
                     const std::vector<std::complex<double>>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("proj_distance: dimension mismatch");
    double np = 0.0, nq = 0.0;
    for (size_t k = 0; k < p.size(); ++k) {
        np += std::norm(p[k]);
        nq += std::norm(q[k]);
    }
    if (np == 0.0 || nq == 0.0) throw std::invalid_argument("proj_distance: zero vector");
    // sine of the Fubini-Study angle as |p ^ q| / (|p| |q|); the wedge form
    // avoids the cancellation of 1 - cos^2 near zero
    double wedge2 = 0.0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            wedge2 += std::norm(p[a] * q[b] - p[b] * q[a]);
    double s = std::sqrt(wedge2 / (np * nq));
    return s > 1.0 ? 1.0 : s;
}

// --- expression parsing ---

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t e = k;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            out.push_back({Token::Number, s.substr(k, e - k)});
            k = e;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t e = k;
            while (e < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_'))
                ++e;
            out.push_back({Token::Ident, s.substr(k, e - k)});
            k = e;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Plus, "+"}); break;
            case '-': out.push_back({Token::Minus, "-"}); break;
            case '*': out.push_back({Token::Star, "*"}); break;
            case '^': out.push_back({Token::Caret, "^"}); break;
            case '(': out.push_back({Token::LParen, "("}); break;
            case ')': out.push_back({Token::RParen, ")"}); break;
            case '/': out.push_back({Token::Slash, "/"}); break;
            default: throw std::invalid_argument(std::string("bad character in expression: ") + c);
        }
        ++k;
    }
    out.push_back({Token::End, ""});
    return out;
}

// Recursive-descent parser shared by the HomoPoly and TauPoly front ends.
template <class V, class Atom>
class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, Atom atom) : tokens_(std::move(tokens)), atom_(atom) {}

    V parse() {
        V v = expr();
        expect(Token::End);
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    void expect(Token::Kind k) {
        if (tokens_[pos_].kind != k) throw std::invalid_argument("parse error in expression");
        ++pos_;
    }

    V expr() {
        bool neg = false;
        while (peek().kind == Token::Minus || peek().kind == Token::Plus) {
            if (next().kind == Token::Minus) neg = !neg;
        }
        V acc = term();
        if (neg) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            V t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    V term() {
        V acc = factor();
        while (peek().kind == Token::Star || peek().kind == Token::LParen ||
               peek().kind == Token::Ident || peek().kind == Token::Number ||
               peek().kind == Token::Slash) {
            if (peek().kind == Token::Star) next();
            else if (peek().kind == Token::Slash) {
                next();
                // only rational division: divisor must be an integer literal
                if (peek().kind != Token::Number)
                    throw std::invalid_argument("only division by integers is supported");
                BigInt den(next().text);
                acc = atom_.rational(Rational(1, den)) * acc;
                continue;
            }
            acc = acc * factor();
        }
        return acc;
    }

    V factor() {
        V base = primary();
        if (peek().kind == Token::Caret) {
            next();
            if (peek().kind != Token::Number) throw std::invalid_argument("bad exponent");
            int e = std::stoi(next().text);
            V acc = atom_.one();
            for (int k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    V primary() {
        if (peek().kind == Token::Number) return atom_.rational(Rational(BigInt(next().text)));
        if (peek().kind == Token::Minus) {
            next();
            return -primary();
        }
        if (peek().kind == Token::LParen) {
            next();
            V v = expr();
            expect(Token::RParen);
            return v;
        }
        if (peek().kind == Token::Ident) return atom_.ident(next().text);
        throw std::invalid_argument("parse error in expression");
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    Atom atom_;
};

struct PolyAtom {
    const std::vector<std::string>* vars;
    HomoPoly rational(const Rational& q) const { return HomoPoly::constant(*vars, Cyclo(q)); }
    HomoPoly one() const { return HomoPoly::constant(*vars, Cyclo::one()); }
    HomoPoly ident(const std::string& name) const {
        for (size_t v = 0; v < vars->size(); ++v)
            if ((*vars)[v] == name) return HomoPoly::variable(*vars, v);
        if (name == "i") return HomoPoly::constant(*vars, Cyclo::i());
        if (name == "zeta") return HomoPoly::constant(*vars, Cyclo::zeta6());
        if (name == "sqrt2") return HomoPoly::constant(*vars, Cyclo::sqrt2());
        if (name == "sqrt3") return HomoPoly::constant(*vars, Cyclo::sqrt3());
        throw std::invalid_argument("unknown symbol: " + name);
    }
};

struct TauAtom {
    TauPoly rational(const Rational& q) const { return TauPoly(Cyclo(q)); }
    TauPoly one() const { return TauPoly(Cyclo::one()); }
    TauPoly ident(const std::string& name) const {
        if (name == "tau" || name == "t") return TauPoly::tau();
        if (name == "i") return TauPoly(Cyclo::i());
        if (name == "zeta") return TauPoly(Cyclo::zeta6());
        if (name == "sqrt2") return TauPoly(Cyclo::sqrt2());
        if (name == "sqrt3") return TauPoly(Cyclo::sqrt3());
        throw std::invalid_argument("unknown symbol: " + name);
    }
};

}  // namespace

HomoPoly parse_poly_expr(const std::string& expr, const std::vector<std::string>& vars) {
    ExprParser<HomoPoly, PolyAtom> p(tokenize(expr), PolyAtom{&vars});
    return p.parse();
}

std::optional<TauPoly> parse_scalar_expr(const std::string& expr) {
    try {
        ExprParser<TauPoly, TauAtom> p(tokenize(expr), TauAtom{});
        return p.parse();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace lattes
