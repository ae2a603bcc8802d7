#pragma once

// The six point/crystallographic groups attached to the pairs (Lambda, G_i):
// finite sets of affine elements with multiplication mod the lattice.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattes/lattice.hpp"

namespace lattes {

enum class CaseId { G1, G2, G3, G4, G5, G6 };

std::string case_str(CaseId id);
std::optional<CaseId> parse_case(const std::string& s);

struct GroupElement {
    CMat2 matrix;
    TVec2 translation;  // stored reduced to the fundamental-cell representative

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.matrix == b.matrix && a.translation == b.translation;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (!(a.matrix == b.matrix)) return a.matrix < b.matrix;
        return a.translation < b.translation;
    }
};

class CrystalGroup {
public:
    static CrystalGroup enumerate(CaseId id);

    // (3,3)_0 after the change of coordinates: <(-1 -1; 0 1), (0 1; 1 0)>
    // acting on L^2(tau).
    static CrystalGroup g6_new_coords();

    CaseId id() const { return id_; }
    const Lattice2& lattice() const { return lattice_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;

    // least n >= 1 with g^n == identity mod the lattice
    int order_mod_lattice(const GroupElement& g, int guard = 64) const;

    // order as an exact affine map of C^2 (no reduction mod the lattice);
    // 0 when no power below the guard is the identity
    static int exact_affine_order(const GroupElement& g, int guard = 64);

    static int matrix_order(const CMat2& m, int guard = 64);

    std::vector<GroupElement> elements_with_matrix(const CMat2& m) const;
    std::vector<GroupElement> elements_with_matrix_order(int n) const;

    // named element built from a word in the generators, e.g. "uvu"
    std::optional<GroupElement> word(const std::string& w) const;

private:
    void close_under_multiplication();

    CaseId id_ = CaseId::G1;
    Lattice2 lattice_ = Lattice2::l2_tau();
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
    std::vector<std::string> generator_names_;
};

}  // namespace lattes
