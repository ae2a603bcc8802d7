#include "lattes/orbifold.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lattes {

bool maps_onto(const HomogeneousMap& f, const HomoPoly& h, const HomoPoly& h2) {
    HomoPoly pulled = h2.substitute(f.components);
    return pulled.divide_exact(h).has_value();
}

int critical_multiplicity(const HomoPoly& jacobian, const HomoPoly& h) {
    int power = 0;
    HomoPoly rem = jacobian;
    while (true) {
        auto q = rem.divide_exact(h);
        if (!q) break;
        rem = *q;
        ++power;
        if (rem.is_zero() || rem.degree() < h.degree()) break;
    }
    return power + 1;
}

int critical_multiplicity(const HomogeneousMap& f, const HomoPoly& h) {
    return critical_multiplicity(jacobian_det(f), h);
}

namespace {

// smooth conic test: determinant of the symmetric matrix is nonzero
bool conic_is_smooth(const HomoPoly& q) {
    auto coef = [&q](int a, int b, int c) { return q.coeff({a, b, c}); };
    Cyclo half{Rational(1, 2)};
    Cyclo m[3][3] = {
        {coef(2, 0, 0), half * coef(1, 1, 0), half * coef(1, 0, 1)},
        {half * coef(1, 1, 0), coef(0, 2, 0), half * coef(0, 1, 1)},
        {half * coef(1, 0, 1), half * coef(0, 1, 1), coef(0, 0, 2)}};
    Cyclo det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return !det.is_zero();
}

}  // namespace

PortraitReport verify_portrait(const HomogeneousMap& f, const Portrait& portrait,
                               CaseId branch_case) {
    PortraitReport rep;
    rep.map_name = portrait.map_name;
    const size_t n = portrait.nodes.size();

    // node sanity: degree-2 nodes are smooth conics, nodes are pairwise
    // without common factors
    rep.nodes_ok = true;
    for (size_t k = 0; k < n; ++k) {
        const HomoPoly& p = portrait.nodes[k].poly;
        if (p.degree() == 2 && !conic_is_smooth(p)) {
            rep.nodes_ok = false;
            rep.failures.push_back("node " + std::to_string(k) + " is a singular conic");
        }
        for (size_t j = k + 1; j < n; ++j)
            if (!no_common_factor(p, portrait.nodes[j].poly)) {
                rep.nodes_ok = false;
                rep.failures.push_back("nodes " + std::to_string(k) + "," + std::to_string(j) +
                                       " share a factor");
            }
    }

    // (a) edges by exact divisibility
    rep.edges_ok = true;
    for (size_t k = 0; k < n; ++k) {
        int target = portrait.edge[k];
        if (!maps_onto(f, portrait.nodes[k].poly,
                       portrait.nodes[static_cast<size_t>(target)].poly)) {
            rep.edges_ok = false;
            rep.failures.push_back("edge " + std::to_string(k) + " -> " +
                                   std::to_string(target) + " fails divisibility");
        }
    }

    // (b) Jacobian factors exactly into the portrait nodes
    HomoPoly jac = jacobian_det(f);
    HomoPoly rem = jac;
    rep.multiplicities.assign(n, 1);
    for (size_t k = 0; k < n; ++k) {
        int m = critical_multiplicity(jac, portrait.nodes[k].poly);
        rep.multiplicities[k] = m;
        for (int p = 0; p + 1 < m; ++p) {
            auto q = rem.divide_exact(portrait.nodes[k].poly);
            if (!q) {
                rep.failures.push_back("jacobian lost a factor of node " + std::to_string(k));
                break;
            }
            rem = *q;
        }
    }
    rep.jacobian_exhausted = !rem.is_zero() && rem.is_constant();
    if (!rep.jacobian_exhausted)
        rep.failures.push_back("jacobian is not exhausted by the portrait nodes");

    // (c) parabolic condition, exact integer arithmetic
    rep.parabolic_ok = true;
    for (size_t k = 0; k < n; ++k) {
        int target = portrait.edge[k];
        int lhs = portrait.nodes[static_cast<size_t>(target)].weight;
        int rhs = rep.multiplicities[k] * portrait.nodes[k].weight;
        if (lhs != rhs) {
            rep.parabolic_ok = false;
            rep.failures.push_back("parabolic condition fails at node " + std::to_string(k));
        }
    }

    // degree bookkeeping: sum deg(H) (m_H - 1) = 3 (d_f - 1)
    int total = 0;
    for (size_t k = 0; k < n; ++k)
        total += portrait.nodes[k].poly.degree() * (rep.multiplicities[k] - 1);
    rep.degree_bookkeeping_ok = (total == 3 * (f.degree() - 1)) &&
                                (jac.is_zero() ? false : jac.degree() == 3 * (f.degree() - 1));
    if (!rep.degree_bookkeeping_ok) rep.failures.push_back("degree bookkeeping fails");

    // (d) branch table: nodes of weight >= 2 against the case's table
    std::multiset<std::pair<int, int>> got, want;
    for (size_t k = 0; k < n; ++k)
        if (portrait.nodes[k].weight >= 2)
            got.insert({portrait.nodes[k].poly.degree(), portrait.nodes[k].weight});
    for (auto& dw : branch_table(branch_case)) want.insert(dw);
    rep.branch_table_ok = (got == want);
    if (!rep.branch_table_ok) rep.failures.push_back("branch table mismatch");

    // critical finiteness: every critical node reaches a cycle within n steps
    rep.critically_finite = true;
    for (size_t k = 0; k < n; ++k) {
        if (rep.multiplicities[k] < 2) continue;
        std::set<int> visited;
        int cur = static_cast<int>(k);
        bool cycled = false;
        for (size_t step = 0; step <= n; ++step) {
            if (!visited.insert(cur).second) {
                cycled = true;
                break;
            }
            cur = portrait.edge[static_cast<size_t>(cur)];
        }
        if (!cycled) {
            rep.critically_finite = false;
            rep.failures.push_back("critical node " + std::to_string(k) +
                                   " does not reach a cycle");
        }
    }

    rep.pass = rep.nodes_ok && rep.edges_ok && rep.jacobian_exhausted && rep.parabolic_ok &&
               rep.degree_bookkeeping_ok && rep.branch_table_ok && rep.critically_finite;
    return rep;
}

PortraitReport verify_portrait(const std::string& map_name) {
    const CatalogEntry& entry = catalog(map_name);
    return verify_portrait(entry.map, catalog_portrait(map_name), entry.case_id);
}

}  // namespace lattes
