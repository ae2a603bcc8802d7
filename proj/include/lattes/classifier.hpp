#pragma once

// Descent of affine torus maps to P^2 and the brute-force re-derivation of
// the classification tables: for each pair (Lambda, G_i), every assignment
// of group generators to candidate images of the same matrix order is fed
// into the exact intertwiner system A*B = C*A; the one-dimensional solution
// families, normalized and deduplicated, are the matrix tables, and the
// translation congruences are solved mod the lattice by Smith reduction.

#include <optional>
#include <string>
#include <vector>

#include "lattes/crystal.hpp"

namespace lattes {

struct AffineTorusMap {
    TMat2 matrix;
    TVec2 translation;
};

struct RCondition {
    bool diagonal_form = false;  // r = e(1,1)^T with e = mu*e mod L
    Cyclo mu;
    std::vector<TVec2> residues;  // representatives mod Lambda
};

struct MatrixFamily {
    CaseId case_id = CaseId::G1;
    bool new_coords = false;
    int type_index = 0;  // 1-based position in the table
    CMat2 shape;         // normalized: first nonzero of (a,b,c,d) scaled to 1
    CMat2 table_shape;   // the exact tabulated normalization
    RCondition r_condition;
    std::vector<TVec2> translation_classes;  // full congruence solution set mod Lambda
};

struct DescendsAssignment {
    std::string generator;
    GroupElement image;
};

struct DescendsResult {
    bool ok = false;
    bool lattice_preserved = false;
    std::vector<DescendsAssignment> assignment;
    std::string failure;
};

// Checks condition L.g = h.L mod Lambda for every generator g, reporting a
// witness h per generator or a refusal.
DescendsResult descends(const AffineTorusMap& map, const CrystalGroup& group);

std::vector<MatrixFamily> classify(CaseId id, bool g6_new_coords = false);

// The tabulated matrix forms, in the exact normalization used by the
// iteration identities (G5 carries the sixteen A_i plus eight more; G6 has
// both coordinate presentations).
const std::vector<CMat2>& classification_table(CaseId id, bool new_coords = false);

// Residue relation e = mu*e mod L for the case (G6 only in new coordinates).
Cyclo case_residue_relation(CaseId id, bool new_coords = false);

CMat2 normalize_family(const CMat2& m);
bool scalar_preserves_lattice(const Cyclo& a, const Lattice2& lattice);

// --- iteration identities ---

struct PowerIdentity {
    int family = 0;    // 1-based
    int exponent = 0;
    // the verified statement: family^exponent == scalar * target, where
    // target is either another table entry or a fixed matrix
    int target_family = 0;  // 0 when the target is an explicit matrix
    CMat2 target;
    Cyclo scalar;
    bool matrix_ok = false;
    bool translation_form_preserved = false;
};

std::vector<PowerIdentity> power_identities(CaseId id);

// --- the G6 change of coordinates ---

struct G6CoordinateChange {
    int type_index = 0;
    CMat2 old_shape;
    CMat2 new_shape;          // P^-1 * B * P
    bool matches_table = false;  // equals the Prop-4.4 entry up to scalar
    bool translations_match = false;
    bool residue_relation_ok = false;  // e' = -2e' has the expected 9 classes
};

CMat2 g6_basis_change();  // the matrix (-1 zeta^2; 1 zeta)
G6CoordinateChange g6_change_of_coordinates(const MatrixFamily& original);

}  // namespace lattes
