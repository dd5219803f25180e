#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ormod/group.hpp"

namespace ormod {

/// Ordered family {q_0, ..., q_{r+1}} with its power-tail exponent s, the
/// degree d of q_0, and (when the diagonal condition holds) the diagonal
/// coefficients of q_0.
struct RealizableFamily {
    FormFamily forms;
    std::int64_t s = 0;
    std::int64_t d = 0;
    std::optional<std::vector<Rat>> lambdas;

    std::size_t n() const { return forms.space()->size(); }
};

/// Outcome of a family check: either a witness (s, d, lambdas.) or the first
/// violated condition (1 = power tail, 2 = degree gaps, 3 = diagonal q_0)
/// with the index where it failed. Violations are values, not errors.
struct FamilyCheck {
    bool ok = false;
    int violated = 0;
    std::size_t index = 0;
    std::string detail;
    std::int64_t s = 0;
    std::int64_t d = 0;
    std::vector<Rat> lambdas;
};

/// Conditions: (1) q_{r+1} = q_0^s with s >= max{n, ceil(deg q_r / deg q_0) + 1};
/// (2) degrees strictly increase, with a gap > 1 at the top pair.
FamilyCheck check_prerealizable(const FormFamily& family);

/// Conditions (1)-(2) plus (3): q_0 = sum lambda_i v_i^d with d > 1 and every
/// variable present with a nonzero coefficient.
FamilyCheck check_realizable(const FormFamily& family);

/// From p_0, ..., p_r builds q_0 = p_0, q_i = p_i q_{i-1} q_0 and the power
/// tail q_0^s with the smallest legal s (or a larger override). The result
/// has the same orthogonal group as the input family.
RealizableFamily make_prerealizable(const FormFamily& P,
                                    std::optional<std::int64_t> s_override = std::nullopt);

struct OrthogonalPresentation {
    RealizableFamily family;
    QMatrix basis_change;
    std::size_t group_order = 0;
    std::size_t invariant_count = 0;
};

/// Pipeline: invariant averages up to the Noether bound, the invariant
/// positive definite quadratic, its diagonalization, the basis rewrite of
/// every form, and the pre-realizable transform. Every element of G,
/// conjugated by the basis change, fixes the output family.
OrthogonalPresentation orthogonal_presentation(const FiniteMatrixGroup& G,
                                               std::optional<std::int64_t> s_override = std::nullopt);

/// The symmetric-group family on n variables: q_0 = n! sum x_i^2,
/// q_j = e_j q_{j-1} q_0 over the elementary symmetric functions,
/// tail exponent s >= ceil((n+4)(n+1)/4) + 1.
RealizableFamily symmetric_family(int n, std::optional<std::int64_t> s = std::nullopt);

struct G2Family {
    RealizableFamily family;
    FormFamily original;
    QMatrix change;
};

/// The 7-variable family fixed by the rational points of G2: the invariant
/// quadratic and the Dickson alternating trilinear form, rewritten through
/// v1 = x0, v_{2i} = x_i + x_i', v_{2i+1} = x_i - x_i', with tail q_0^7.
/// The quadratic's leading term is taken homogeneous: -2 v1^2.
G2Family g2_family();

}  // namespace ormod
