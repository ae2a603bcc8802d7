#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattes/orbifold.hpp"

using namespace lattes;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};
}

TEST_CASE("maps_onto examples for the first portrait") {
    const auto& f = catalog("f_G1").map;
    HomoPoly ymz = parse_poly_expr("y - z", kXYZ);
    HomoPoly conic = parse_poly_expr("x^2 - 4*y*z", kXYZ);
    HomoPoly zline = parse_poly_expr("z", kXYZ);
    CHECK(maps_onto(f, ymz, conic));
    CHECK(maps_onto(f, conic, conic));
    CHECK_FALSE(maps_onto(f, ymz, zline));
}

TEST_CASE("critical multiplicities of f_G1") {
    const auto& f = catalog("f_G1").map;
    CHECK(critical_multiplicity(f, parse_poly_expr("y - z", kXYZ)) == 2);
    CHECK(critical_multiplicity(f, parse_poly_expr("x^2 - 4*y*z", kXYZ)) == 1);
    CHECK(critical_multiplicity(f, parse_poly_expr("y", kXYZ)) == 1);
}

TEST_CASE("critical multiplicity consistent with weights for f_G3") {
    const auto& f = catalog("f_G3").map;
    // edge {y}(4) -> {z}(4): r(f(H)) = m r(H) forces m = 1
    CHECK(critical_multiplicity(f, parse_poly_expr("y", kXYZ)) == 1);
    // edge {x+y+z}(2) -> {y}(4) forces m = 2
    CHECK(critical_multiplicity(f, parse_poly_expr("x + y + z", kXYZ)) == 2);
}

TEST_CASE("all six portraits verify") {
    for (const auto& name : catalog_example_names()) {
        auto rep = verify_portrait(name);
        INFO(name);
        for (const auto& fail : rep.failures) INFO(fail);
        CHECK(rep.nodes_ok);
        CHECK(rep.edges_ok);
        CHECK(rep.jacobian_exhausted);
        CHECK(rep.parabolic_ok);
        CHECK(rep.degree_bookkeeping_ok);
        CHECK(rep.branch_table_ok);
        CHECK(rep.critically_finite);
        CHECK(rep.pass);
    }
}

TEST_CASE("specific expected weights appear") {
    {
        auto rep = verify_portrait("f_G5a");
        // six weight-2 lines
        int weight2_lines = 0;
        const Portrait& p = catalog_portrait("f_G5a");
        for (const auto& node : p.nodes)
            if (node.weight == 2 && node.poly.degree() == 1) ++weight2_lines;
        CHECK(weight2_lines == 6);
        CHECK(rep.pass);
    }
    {
        const Portrait& p = catalog_portrait("f_G4");
        bool has_weight6_line = false;
        for (const auto& node : p.nodes)
            if (node.weight == 6 && node.poly.degree() == 1) has_weight6_line = true;
        CHECK(has_weight6_line);
    }
}

TEST_CASE("a broken portrait is rejected") {
    Portrait p = catalog_portrait("f_G1");
    p.edge[0] = 7;  // send {y-z} to {z}: divisibility must fail
    auto rep = verify_portrait(catalog("f_G1").map, p, CaseId::G1);
    CHECK_FALSE(rep.edges_ok);
    CHECK_FALSE(rep.pass);

    Portrait q = catalog_portrait("f_G1");
    q.nodes[1].weight = 3;  // wrong weight on the conic breaks parabolicity
    auto rep2 = verify_portrait(catalog("f_G1").map, q, CaseId::G1);
    CHECK_FALSE(rep2.parabolic_ok);
    CHECK_FALSE(rep2.pass);
}

TEST_CASE("G6 branch table records the sextic") {
    auto table = branch_table(CaseId::G6);
    REQUIRE(table.size() == 1);
    CHECK(table[0] == std::pair<int, int>{6, 2});
}
