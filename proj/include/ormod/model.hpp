#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ormod/gca.hpp"
#include "ormod/realizable.hpp"

namespace ormod {

/// Parameters of the minimal model attached to a realizable family: the
/// family itself and the degree parameter k. The top generator z has degree
/// 80k + 40d - 41.
struct ModelSpec {
    RealizableFamily family;
    std::int64_t k = 0;

    std::int64_t n() const { return static_cast<std::int64_t>(family.n()); }
    std::int64_t d() const { return family.d; }
    std::int64_t z_degree() const { return 80 * k + 40 * d() - 41; }

    /// Exponent of x1 paired with a form of the given degree in d(z).
    std::int64_t x1_exponent(std::int64_t form_degree) const {
        return 10 * k + 5 * (d() - 1) - 5 * form_degree;
    }

    /// Throws NotRealizable or DegreeBoundViolated (naming the offending
    /// forms) when the model of these parameters does not exist.
    void validate() const;
};

/// Generator indices within a built model: x1, x2, y1, y2, y3, v_1..v_n, z.
struct ModelLayout {
    std::size_t x1 = 0, x2 = 1, y1 = 2, y2 = 3, y3 = 4;
    std::size_t v0 = 5;  // first degree-40 generator
    std::size_t n = 0;

    std::size_t v(std::size_t j) const { return v0 + j; }
    std::size_t z() const { return v0 + n; }
    std::size_t y(std::size_t i) const { return y1 + i; }  // i = 0,1,2
};

ModelLayout model_layout(const ModelSpec& spec);

/// Weighted polynomial space of the even subring: x1 (weight 8), x2 (10),
/// v_1..v_n (40).
VarSpacePtr model_subring_space(std::int64_t n);

/// Conversions between the even subring and algebra elements.
GcaElement embed_subring(const CdgaPtr& model, const ModelLayout& layout, const Poly& p);
Poly extract_subring(const CdgaPtr& model, const ModelLayout& layout, const GcaElement& e);

/// Builds the minimal model of the family at level k. The differential
/// vanishes on x1, x2 and the v_j; d(y_i) are the three x-words; d(z)
/// couples every form of the family with an x1 power, adds the q_0 terms,
/// the y-pair block, and two pure x powers. Every summand of d(z) is checked
/// to have degree |z| + 1 at build time.
CdgaPtr build_model(const ModelSpec& spec);

/// The automorphism fixing x, y, z and acting on the degree-40 generators by
/// the dual action of g. Throws NotOrthogonal when g does not fix the family.
DgaMorphism lift_group_element(const QMatrix& g, const CdgaPtr& model, const ModelSpec& spec);

/// A subring element of degree |z| - |y_i| is forced to be divisible by
/// x1^2 x2^3 (slot 0), x1^3 x2^2 (slot 1) or x1^4 x2 (slot 2); returns the
/// cofactor. Throws WrongDegree on a wrong-degree input; DivisibilityFailure
/// would signal an arithmetic bug, never a legitimate input.
GcaElement slot_cofactor(int slot, const GcaElement& a, const ModelSpec& spec,
                         const CdgaPtr& model);

/// For closed omega = y1 A1 + y2 A2 + y3 A3 of degree |z| returns m with
/// d(m) = omega, namely m = y1 y2 (x2 B2) + y1 y3 (x1 B3) built from the slot
/// cofactors. Throws NotClosed when d(omega) != 0 and WrongShape for terms
/// outside the y_i span.
GcaElement homotopy_witness(const GcaElement& omega, const ModelSpec& spec, const CdgaPtr& model);

struct ScalarSolution {
    Rat x1_scale, x2_scale, y1_scale, y2_scale, y3_scale, z_scale;

    bool all_ones() const {
        return x1_scale.is_one() && x2_scale.is_one() && y1_scale.is_one() &&
               y2_scale.is_one() && y3_scale.is_one() && z_scale.is_one();
    }

    friend bool operator==(const ScalarSolution& a, const ScalarSolution& b) {
        return a.x1_scale == b.x1_scale && a.x2_scale == b.x2_scale && a.y1_scale == b.y1_scale &&
               a.y2_scale == b.y2_scale && a.y3_scale == b.y3_scale && a.z_scale == b.z_scale;
    }
};

/// All rational solutions of the scale-compatibility system coming from the
/// z differential (the y scales substituted from the y differentials). For
/// d = 2 the unique solution is all ones.
std::vector<ScalarSolution> scalar_constraints(std::int64_t k, std::int64_t d = 2);

struct StepResult {
    std::string name;
    bool pass = false;
    std::size_t residue = 0;
    std::string detail;
};

struct ClassificationResult {
    ScalarSolution scalars;
    QMatrix linear_part;                  // A with f(v_j) = sum_i A(i,j) v_i + corrections
    std::vector<Rat> x1_corrections;      // coefficients of x1^5 in f(v_j)
    std::vector<Rat> x2_corrections;      // coefficients of x2^4 in f(v_j)
    std::optional<QMatrix> group_element; // (A^t)^{-1} when every step passes
    std::optional<GcaElement> witness;    // m with f(z) - f_g(z) = d(m)
    std::vector<StepResult> steps;

    ClassificationResult() : linear_part(0) {}

    bool ok() const { return group_element.has_value(); }
    const StepResult* failed_step() const {
        for (const auto& s : steps)
            if (!s.pass) return &s;
        return nullptr;
    }
};

/// Runs the normalization pipeline on a candidate automorphism given by its
/// generator images: shape extraction by degree, the y-scale relations, the
/// vanishing of the y1y2y3 term and of both degree-40 corrections, the scale
/// system, orthogonality of the transposed linear part, the homotopy witness
/// for the z discrepancy, and a final full chain-map verification. Any
/// violated step leaves group_element absent and names the step.
ClassificationResult classify(const DgaMorphism& f, const ModelSpec& spec);

/// Models of one family across several k values; their z degrees
/// 80k + 40d - 41 are pairwise distinct. Errors from individual builds are
/// rethrown with the list index.
std::vector<CdgaPtr> build_models(const RealizableFamily& family,
                                  const std::vector<std::int64_t>& ks);

}  // namespace ormod
