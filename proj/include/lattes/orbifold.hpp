#pragma once

// Orbifold portraits: exact divisibility checks that each critical curve
// maps onto its listed image, that the Jacobian factors into exactly the
// portrait nodes, and that the parabolic weight condition holds.

#include <string>
#include <vector>

#include "lattes/catalog.hpp"

namespace lattes {

// f(H) lies in (hence equals) the zero set of H2: H divides H2 . f.
bool maps_onto(const HomogeneousMap& f, const HomoPoly& h, const HomoPoly& h2);

// m_f(H) = 1 + (largest power of H dividing jacobian_det(f))
int critical_multiplicity(const HomogeneousMap& f, const HomoPoly& h);
int critical_multiplicity(const HomoPoly& jacobian, const HomoPoly& h);

struct PortraitReport {
    std::string map_name;
    bool pass = false;
    bool nodes_ok = false;         // irreducibility / pairwise-factor sanity
    bool edges_ok = false;         // every edge passes exact divisibility
    bool jacobian_exhausted = false;  // J = const * prod H^(m-1)
    bool parabolic_ok = false;     // r(f(H)) = m_f(H) r(H) at every node
    bool degree_bookkeeping_ok = false;  // sum d_H (m_H - 1) = 3(d_f - 1)
    bool branch_table_ok = false;  // node (degree, weight) multiset matches
    bool critically_finite = false;
    std::vector<int> multiplicities;
    std::vector<std::string> failures;
};

PortraitReport verify_portrait(const HomogeneousMap& f, const Portrait& portrait,
                               CaseId branch_case);

// convenience: catalog map + its portrait + its case's branch table
PortraitReport verify_portrait(const std::string& map_name);

}  // namespace lattes
