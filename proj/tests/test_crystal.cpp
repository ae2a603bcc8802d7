#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lattes/crystal.hpp"

using namespace lattes;

TEST_CASE("group orders") {
    CHECK(CrystalGroup::enumerate(CaseId::G6).elements().size() == 6);
    CHECK(CrystalGroup::enumerate(CaseId::G1).elements().size() == 8);
    CHECK(CrystalGroup::enumerate(CaseId::G2).elements().size() == 18);
    CHECK(CrystalGroup::enumerate(CaseId::G3).elements().size() == 32);
    CHECK(CrystalGroup::enumerate(CaseId::G4).elements().size() == 72);
    // G(4,2,2) has 16 matrices; two translation classes mod L^2(i)
    CHECK(CrystalGroup::enumerate(CaseId::G5).elements().size() == 32);
}

TEST_CASE("G6 contains exactly the six listed elements") {
    auto g = CrystalGroup::enumerate(CaseId::G6);
    std::set<GroupElement> expect;
    for (const char* w : {"", "u", "v", "uv", "vu", "uvu"}) expect.insert(*g.word(w));
    std::set<GroupElement> got(g.elements().begin(), g.elements().end());
    CHECK(got == expect);
}

TEST_CASE("element orders match the stated ones") {
    auto g6 = CrystalGroup::enumerate(CaseId::G6);
    CHECK(g6.order_mod_lattice(*g6.word("u")) == 2);
    CHECK(g6.order_mod_lattice(*g6.word("v")) == 2);
    CHECK(g6.order_mod_lattice(*g6.word("uv")) == 3);
    CHECK(g6.order_mod_lattice(*g6.word("vu")) == 3);
    CHECK(g6.order_mod_lattice(*g6.word("uvu")) == 2);

    auto g3 = CrystalGroup::enumerate(CaseId::G3);
    CHECK(g3.order_mod_lattice(*g3.word("t")) == 4);
    CHECK(g3.order_mod_lattice(*g3.word("u")) == 2);
    CHECK(g3.order_mod_lattice(*g3.word("s")) == 2);

    auto g4 = CrystalGroup::enumerate(CaseId::G4);
    CHECK(g4.order_mod_lattice(*g4.word("t")) == 6);
}

TEST_CASE("closure and inverses mod the lattice") {
    for (CaseId id : {CaseId::G1, CaseId::G2, CaseId::G3, CaseId::G5, CaseId::G6}) {
        auto g = CrystalGroup::enumerate(id);
        std::set<GroupElement> all(g.elements().begin(), g.elements().end());
        for (const auto& a : g.elements()) {
            bool has_inverse = false;
            for (const auto& b : g.elements()) {
                GroupElement prod = g.multiply(a, b);
                CHECK(all.count(prod) == 1);
                if (prod == g.identity()) has_inverse = true;
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("order-2 elements of G3 are those of G1 plus s and usu") {
    auto g3 = CrystalGroup::enumerate(CaseId::G3);
    auto g1 = CrystalGroup::enumerate(CaseId::G1);
    std::set<CMat2> g1_mats;
    for (const auto& e : g1.elements()) g1_mats.insert(e.matrix);

    std::set<GroupElement> extra;
    for (const auto& e : g3.elements()) {
        if (g3.order_mod_lattice(e) != 2) continue;
        if (g1_mats.count(e.matrix)) continue;
        extra.insert(e);
    }
    std::set<GroupElement> expect{*g3.word("s"), *g3.word("usu")};
    CHECK(extra == expect);
}

TEST_CASE("order-2 elements of G5 beyond G1 are s, usu, t, ut (exact affine order)") {
    auto g5 = CrystalGroup::enumerate(CaseId::G5);
    auto g1 = CrystalGroup::enumerate(CaseId::G1);
    std::set<CMat2> g1_mats;
    for (const auto& e : g1.elements()) g1_mats.insert(e.matrix);

    // Affine order in E(2), not mod the lattice: elements like (w|h) have
    // order 2 only after reduction and are excluded here.
    std::set<GroupElement> extra;
    for (const auto& e : g5.elements()) {
        if (CrystalGroup::exact_affine_order(e) != 2) continue;
        bool pure = e.translation.x.is_zero() && e.translation.y.is_zero();
        if (pure && g1_mats.count(e.matrix)) continue;
        extra.insert(e);
    }
    std::set<GroupElement> expect{*g5.word("s"), *g5.word("usu"), *g5.word("t"),
                                  *g5.word("ut")};
    CHECK(extra == expect);
}

TEST_CASE("uvt, uts, ust have involutive matrix parts but are not involutions") {
    auto g5 = CrystalGroup::enumerate(CaseId::G5);
    for (const char* w : {"uvt", "uts", "ust"}) {
        auto e = *g5.word(w);
        CHECK(CrystalGroup::matrix_order(e.matrix) == 2);
        CHECK(CrystalGroup::exact_affine_order(e) != 2);
    }

    // the displayed forms: uvt = (u | -h), uts = (s' | h), ust = (s | h')
    Cyclo one = Cyclo::one();
    Cyclo i = Cyclo::i();
    Cyclo hh = (one + i) * Cyclo(Rational(1, 2));
    auto uvt = *g5.word("uvt");
    CHECK(uvt.matrix == CMat2{Cyclo::zero(), one, one, Cyclo::zero()});
    CHECK(g5.lattice().congruent(uvt.translation, {TauPoly(-hh), TauPoly(-hh)}));
    auto uts = *g5.word("uts");
    CHECK(uts.matrix == CMat2{Cyclo::zero(), -i, i, Cyclo::zero()});
    CHECK(g5.lattice().congruent(uts.translation, {TauPoly(hh), TauPoly(hh)}));
    auto ust = *g5.word("ust");
    CHECK(ust.matrix == CMat2{Cyclo::zero(), i, -i, Cyclo::zero()});
    CHECK(g5.lattice().congruent(ust.translation,
                                 {TauPoly(-i * hh), TauPoly(i * hh)}));
}

TEST_CASE("G5 special translation is stored exactly") {
    auto g5 = CrystalGroup::enumerate(CaseId::G5);
    auto t = *g5.word("t");
    Cyclo hh = (Cyclo::one() + Cyclo::i()) * Cyclo(Rational(1, 2));
    CHECK(t.translation == TVec2{TauPoly(hh), TauPoly(hh)});
}
