#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "lattes/cyclo.hpp"
#include "support.hpp"

using namespace lattes;
using testsupport::Rng;

namespace {

Cyclo random_cyclo(Rng& rng, int max_abs = 4) {
    Cyclo c;
    for (int k = 0; k < 8; ++k) {
        long long num = rng.integer(-max_abs, max_abs);
        long long den = rng.integer(1, 3);
        c.coeff(k) = Rational(num, den);
    }
    return c;
}

}  // namespace

TEST_CASE("defining relations hold exactly") {
    const Cyclo i = Cyclo::i();
    const Cyclo zeta = Cyclo::zeta6();
    const Cyclo one = Cyclo::one();

    CHECK(i * i == -one);
    CHECK(zeta * zeta * zeta == -one);
    CHECK(zeta * zeta - zeta + one == Cyclo::zero());
    CHECK(zeta * zeta == zeta - one);  // minimal polynomial of zeta_6
    CHECK(Cyclo::sqrt2() * Cyclo::sqrt2() == Cyclo(2));
    CHECK(Cyclo::sqrt3() * Cyclo::sqrt3() == Cyclo(3));
    CHECK(Cyclo::sqrt3() * i == Cyclo::sqrt3_i());
    CHECK(Cyclo::sqrt3_i() == zeta + zeta - one);
    CHECK(Cyclo::zeta24_pow(12) == -one);
    CHECK(Cyclo::zeta24_pow(8) == Cyclo::zeta24_pow(4) - one);
}

TEST_CASE("numeric embedding matches closed forms") {
    auto z = Cyclo::zeta6().numeric();
    CHECK(std::abs(z - std::complex<double>(0.5, 0.8660254037844386)) < 1e-14);
    auto s6 = (Cyclo::sqrt2() * Cyclo::sqrt3()).numeric();
    CHECK(std::abs(s6 - std::sqrt(6.0)) < 1e-13);
    auto i = Cyclo::i().numeric();
    CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-15);
}

TEST_CASE("numeric embedding is a ring homomorphism") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        Cyclo a = random_cyclo(rng);
        Cyclo b = random_cyclo(rng);
        auto lhs = (a * b).numeric();
        auto rhs = a.numeric() * b.numeric();
        CHECK(testsupport::rel_err(lhs, rhs) < 1e-12);
        CHECK(std::abs((a + b).numeric() - (a.numeric() + b.numeric())) < 1e-12);
    }
}

TEST_CASE("products of up to 10 constants stay within 1e-14") {
    const Cyclo constants[] = {Cyclo::i(),     Cyclo::zeta6(), Cyclo::sqrt2(),
                               Cyclo::sqrt3(), Cyclo::sqrt3_i()};
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Cyclo prod = Cyclo::one();
        std::complex<double> num(1.0, 0.0);
        for (int k = 0; k < 10; ++k) {
            const Cyclo& c = constants[rng.integer(0, 4)];
            prod *= c;
            num *= c.numeric();
        }
        CHECK(testsupport::rel_err(prod.numeric(), num) < 1e-14);
    }
}

TEST_CASE("inverse is exact") {
    Rng rng(99);
    int done = 0;
    while (done < 100) {
        Cyclo a = random_cyclo(rng);
        if (a.is_zero()) continue;
        auto inv = a.inverse();
        REQUIRE(inv.has_value());
        CHECK(*inv * a == Cyclo::one());
        ++done;
    }
    CHECK_FALSE(Cyclo::zero().inverse().has_value());
}

TEST_CASE("conjugation is an involution and matches numerics") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Cyclo a = random_cyclo(rng);
        CHECK(a.conj().conj() == a);
        CHECK(std::abs(a.conj().numeric() - std::conj(a.numeric())) < 1e-12);
    }
    CHECK(Cyclo::i().conj() == -Cyclo::i());
}

TEST_CASE("tau polynomials") {
    TauPoly t = TauPoly::tau();
    TauPoly p = t * t;
    CHECK(p.degree() == 2);
    auto at_i = p.numeric(std::complex<double>(0.0, 1.0));
    REQUIRE(at_i.has_value());
    CHECK(std::abs(*at_i - std::complex<double>(-1.0, 0.0)) < 1e-15);

    // degree-0 embedding is lossless
    TauPoly c{Cyclo::sqrt2()};
    CHECK(c.is_cyclo());
    CHECK(*c.as_cyclo() == Cyclo::sqrt2());

    // no relation is ever applied to tau
    CHECK((t * t - TauPoly(Cyclo(-1))).degree() == 2);
    CHECK_FALSE(t.numeric().has_value());

    // coefficient-wise equality
    CHECK(t + t == TauPoly(Cyclo(2)) * t);
    CHECK(t - t == TauPoly());
}

TEST_CASE("serialization round-trips") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Cyclo a = random_cyclo(rng);
        auto back = Cyclo::parse(a.str());
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    TauPoly p = TauPoly(Cyclo::i()) + TauPoly::tau() * TauPoly(Cyclo::sqrt2()) +
                TauPoly::tau() * TauPoly::tau() * TauPoly(Cyclo(Rational(-7, 3)));
    auto back = TauPoly::parse(p.str());
    REQUIRE(back.has_value());
    CHECK(*back == p);
}
