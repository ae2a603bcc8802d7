#pragma once

// The built-in example maps with their affine sources, plus the portrait
// data used by the orbifold verifier.

#include <optional>
#include <string>
#include <vector>

#include "lattes/classifier.hpp"
#include "lattes/polynomial.hpp"

namespace lattes {

struct CatalogEntry {
    std::string name;
    HomogeneousMap map;
    bool lattes_example = false;  // has an affine source on one of the six pairs
    CaseId case_id = CaseId::G1;
    int type_index = 0;
    Cyclo scalar_a;
    std::string p1_factor;  // catalog name of the P^1 map it lifts, when one exists
};

const CatalogEntry& catalog(const std::string& name);  // throws on unknown name
std::vector<std::string> catalog_names();
std::vector<std::string> catalog_example_names();  // the f_* maps with portraits

// (a * B | 0) with B the classified table shape of the entry
AffineTorusMap affine_source(const CatalogEntry& entry);

struct Curve {
    HomoPoly poly;
    int weight = 1;  // ramification index r(H) of Psi along the curve
};

struct Portrait {
    std::string map_name;
    std::vector<Curve> nodes;
    std::vector<int> edge;  // edge[k] = index of f(node k); one per node

    std::string str() const;
    static std::optional<Portrait> parse(const std::string& text);
};

const Portrait& catalog_portrait(const std::string& map_name);

// branch table {(d_j, r_j)} of Psi for a case
std::vector<std::pair<int, int>> branch_table(CaseId id);

}  // namespace lattes
