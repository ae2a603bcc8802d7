#include "lattes/catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lattes {

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kP1{"xi", "eta"};
const std::vector<std::string> kQuad{"xi", "eta", "xip", "etap"};

HomogeneousMap make_map(const std::vector<std::string>& vars,
                        const std::vector<std::string>& comps) {
    HomogeneousMap m;
    for (const auto& c : comps) m.components.push_back(parse_poly_expr(c, vars));
    return m;
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;
    auto add = [&cat](CatalogEntry e) { cat.emplace(e.name, std::move(e)); };

    Cyclo one_plus_i = Cyclo::one() + Cyclo::i();

    add({"f_G1",
         make_map(kXYZ, {"2*i*x*(y+z)", "x^2 + (y-z)^2", "-4*y*z"}),
         true, CaseId::G1, 5, one_plus_i, "g_G1"});
    add({"f_sq",
         make_map(kXYZ, {"2*x*(y-z)", "(y+z)^2", "x^2 - 4*y*z"}),
         true, CaseId::G1, 1, Cyclo::one(), ""});
    add({"f_G2",
         make_map(kXYZ, {"sqrt3*i*x*(x^2 + 3*(y+z)^2)", "-y*(3*x^2 + (y - 3*z)^2)",
                         "3*z*(3*x^2 + (3*y - z)^2)"}),
         true, CaseId::G2, 1, Cyclo::sqrt3_i(), "g_G2"});
    add({"f_G3",
         make_map(kXYZ, {"-4*(x*(y+z) + 4*y*z)",
                         "x^2 + y^2 + z^2 + 2*(x*y + y*z + x*z)", "16*y*z"}),
         true, CaseId::G3, 1, one_plus_i, "g_G3"});
    add({"f_G4",
         make_map(kXYZ, {"-3*(x*(x + 3*(y+z))^2 + 96*(x+y+z)*y*z)",
                         "y*(3*x + y + 9*z)^2", "9*z*(3*x + 9*y + z)^2"}),
         true, CaseId::G4, 1, Cyclo::sqrt3_i(), "g_G4"});
    add({"f_G5a",
         make_map(kXYZ, {"-4*x*y", "(x - y + 2*z)^2", "(x+y)^2"}),
         true, CaseId::G5, 17, one_plus_i, ""});
    add({"f_G5b",
         make_map(kXYZ, {"4*x*z", "(x+z)^2", "(x - 2*y + z)^2"}),
         true, CaseId::G5, 1, Cyclo::one(), ""});

    add({"phi", make_map(kXYZ, {"x^2", "(y+z)^2", "(y-z)^2"}), false, CaseId::G1, 0,
         Cyclo(), ""});
    add({"pi2", make_map(kQuad, {"xi*etap + xip*eta", "xi*xip", "eta*etap"}), false,
         CaseId::G1, 0, Cyclo(), ""});

    add({"g_G1", make_map(kP1, {"xi^2 + eta^2", "2*i*xi*eta"}), false, CaseId::G1, 0,
         one_plus_i, ""});
    // the multiplication-by-2 factor of the square of f_sq (g2 = 4, g3 = 0)
    add({"g_sq_base",
         make_map(kP1, {"(xi^2 + eta^2)^2", "4*xi*eta*(xi^2 - eta^2)"}), false,
         CaseId::G1, 0, Cyclo(2), ""});
    add({"g_G2", make_map(kP1, {"i*(xi^3 + 3*xi*eta^2)", "sqrt3*(3*xi^2*eta + eta^3)"}),
         false, CaseId::G2, 0, Cyclo::sqrt3_i(), ""});
    add({"g_G3", make_map(kP1, {"(xi + eta)^2", "-4*xi*eta"}), false, CaseId::G3, 0,
         one_plus_i, ""});
    add({"g_G4", make_map(kP1, {"-xi*(xi + 3*eta)^2", "3*eta*(3*xi + eta)^2"}), false,
         CaseId::G4, 0, Cyclo::sqrt3_i(), ""});
    return cat;
}

const std::map<std::string, CatalogEntry>& catalog_map() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

Portrait make_portrait(const std::string& name, const std::vector<std::string>& polys,
                       const std::vector<int>& weights, const std::vector<int>& edges) {
    Portrait p;
    p.map_name = name;
    for (size_t k = 0; k < polys.size(); ++k)
        p.nodes.push_back({parse_poly_expr(polys[k], kXYZ), weights[k]});
    p.edge = edges;
    return p;
}

std::map<std::string, Portrait> build_portraits() {
    std::map<std::string, Portrait> out;

    out.emplace("f_G1", make_portrait("f_G1",
        {"y - z", "x^2 - 4*y*z", "x - y - z", "x - i*y + i*z", "x + y + z",
         "x + i*y - i*z", "y", "z"},
        {1, 2, 1, 2, 1, 2, 2, 2},
        {1, 1, 3, 6, 5, 6, 7, 7}));

    out.emplace("f_sq", make_portrait("f_sq",
        {"y + z", "y", "x + y - z", "x + y + z", "x - y + z", "x - y - z",
         "x^2 - 4*y*z", "z"},
        {1, 2, 1, 2, 1, 2, 2, 2},
        {1, 6, 3, 6, 5, 6, 7, 6}));

    out.emplace("f_G2", make_portrait("f_G2",
        {"x^2 + (3*y - z)*(y - 3*z)", "x^2 - 4*y*z", "x - y - z",
         "sqrt3*i*x - 3*y + z", "x + y + z", "sqrt3*i*x + 3*y - z", "z"},
        {1, 2, 1, 3, 1, 3, 3},
        {1, 1, 3, 6, 5, 6, 6}));

    out.emplace("f_G3", make_portrait("f_G3",
        {"y - z", "x^2 - 4*y*z", "x - y - z", "x + y + z", "y", "z"},
        {1, 2, 1, 2, 4, 4},
        {1, 1, 3, 4, 5, 5}));

    out.emplace("f_G4", make_portrait("f_G4",
        {"(x + 3*(y+z))^2 - 64*y*z", "x^2 - 4*y*z", "x - y - z", "3*x + 9*y + z",
         "z", "3*x + y + 9*z", "y"},
        {1, 2, 1, 3, 6, 1, 2},
        {1, 1, 3, 4, 4, 6, 6}));

    out.emplace("f_G5a", make_portrait("f_G5a",
        {"x + y", "z", "x - y + z", "x - y", "x + z", "y - z", "x - y + 2*z",
         "y", "x"},
        {1, 2, 2, 1, 2, 2, 1, 2, 2},
        {1, 2, 2, 4, 5, 5, 7, 8, 8}));

    out.emplace("f_G5b", make_portrait("f_G5b",
        {"x + z", "y", "y - z", "x - z", "x - y", "x - y + z", "x - 2*y + z",
         "z", "x"},
        {1, 2, 2, 1, 2, 2, 1, 2, 2},
        {1, 2, 5, 4, 5, 2, 7, 8, 8}));

    return out;
}

}  // namespace

const CatalogEntry& catalog(const std::string& name) {
    auto it = catalog_map().find(name);
    if (it == catalog_map().end()) throw std::invalid_argument("unknown catalog map: " + name);
    return it->second;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : catalog_map()) {
        (void)v;
        out.push_back(k);
    }
    return out;
}

std::vector<std::string> catalog_example_names() {
    return {"f_G1", "f_sq", "f_G2", "f_G3", "f_G4", "f_G5a", "f_G5b"};
}

AffineTorusMap affine_source(const CatalogEntry& entry) {
    if (!entry.lattes_example) throw std::invalid_argument("map has no affine source");
    const auto& table = classification_table(entry.case_id);
    CMat2 b = table[static_cast<size_t>(entry.type_index - 1)];
    return {to_tau(scale(entry.scalar_a, b)), TVec2{}};
}

const Portrait& catalog_portrait(const std::string& map_name) {
    static const std::map<std::string, Portrait> portraits = build_portraits();
    auto it = portraits.find(map_name);
    if (it == portraits.end()) throw std::invalid_argument("no portrait for map: " + map_name);
    return it->second;
}

std::vector<std::pair<int, int>> branch_table(CaseId id) {
    switch (id) {
        case CaseId::G1: return {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {2, 2}};
        case CaseId::G2: return {{1, 3}, {1, 3}, {1, 3}, {2, 2}};
        case CaseId::G3: return {{1, 2}, {1, 4}, {1, 4}, {2, 2}};
        case CaseId::G4: return {{1, 2}, {1, 3}, {1, 6}, {2, 2}};
        case CaseId::G5: return {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}};
        case CaseId::G6: return {{6, 2}};
    }
    return {};
}

std::string Portrait::str() const {
    std::ostringstream os;
    os << map_name << "\n";
    for (size_t k = 0; k < nodes.size(); ++k)
        os << nodes[k].weight << " -> " << edge[k] << " : " << nodes[k].poly.str() << "\n";
    return os.str();
}

std::optional<Portrait> Portrait::parse(const std::string& text) {
    std::istringstream in(text);
    Portrait p;
    if (!std::getline(in, p.map_name)) return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto arrow = line.find(" -> ");
        auto colon = line.find(" : ");
        if (arrow == std::string::npos || colon == std::string::npos) return std::nullopt;
        Curve c;
        c.weight = std::stoi(line.substr(0, arrow));
        int target = std::stoi(line.substr(arrow + 4, colon - arrow - 4));
        auto poly = HomoPoly::parse(line.substr(colon + 3), kXYZ);
        if (!poly) return std::nullopt;
        c.poly = *poly;
        p.nodes.push_back(std::move(c));
        p.edge.push_back(target);
    }
    if (p.nodes.empty()) return std::nullopt;
    return p;
}

}  // namespace lattes
