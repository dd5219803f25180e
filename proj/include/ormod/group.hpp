#pragma once

#include <cstdint>
#include <vector>

#include "ormod/matrix.hpp"
#include "ormod/poly.hpp"

namespace ormod {

/// Ordered list of nonzero homogeneous forms over one weight-one space.
class FormFamily {
public:
    FormFamily(VarSpacePtr vs, std::vector<Poly> forms) : vs_(std::move(vs)), forms_(std::move(forms)) {
        for (const Poly& f : forms_) {
            if (!same_space(f.space(), vs_))
                fail(Errc::VarSpaceMismatch, "family forms live in different spaces");
            if (f.is_zero()) fail(Errc::InvalidArgument, "zero form in family");
            if (!is_homogeneous(f)) fail(Errc::NonHomogeneous, "inhomogeneous form in family");
        }
    }

    const VarSpacePtr& space() const { return vs_; }
    const std::vector<Poly>& forms() const { return forms_; }
    std::size_t size() const { return forms_.size(); }
    const Poly& operator[](std::size_t i) const { return forms_[i]; }

    friend bool operator==(const FormFamily& a, const FormFamily& b) {
        return same_space(a.vs_, b.vs_) && a.forms_ == b.forms_;
    }
    friend bool operator!=(const FormFamily& a, const FormFamily& b) { return !(a == b); }

private:
    VarSpacePtr vs_;
    std::vector<Poly> forms_;
};

/// Finite group of invertible rational matrices, stored as the enumerated
/// closure of its generators.
class FiniteMatrixGroup {
public:
    FiniteMatrixGroup(std::vector<QMatrix> generators, std::vector<QMatrix> elements)
        : generators_(std::move(generators)), elements_(std::move(elements)) {}

    std::size_t order() const { return elements_.size(); }
    std::size_t dim() const { return elements_.empty() ? 0 : elements_[0].n(); }
    const std::vector<QMatrix>& generators() const { return generators_; }
    const std::vector<QMatrix>& elements() const { return elements_; }

    bool contains(const QMatrix& m) const;

private:
    std::vector<QMatrix> generators_;
    std::vector<QMatrix> elements_;  // sorted canonically
};

/// Breadth-first closure of the generated group; throws OrderBoundExceeded
/// once more than max_order distinct elements appear (a shear generates an
/// infinite group, for example).
FiniteMatrixGroup group_closure(const std::vector<QMatrix>& generators, std::size_t max_order = 10000);

/// Left action on polynomial functions: (g.p)(u) = p(g^-1 u).
Poly act(const QMatrix& g, const Poly& p);

/// True iff q o f = q for every form q of the family.
bool is_orthogonal(const QMatrix& f, const FormFamily& family);

/// Unnormalized Reynolds sum over the whole group; the result is invariant.
Poly reynolds(const FiniteMatrixGroup& G, const Poly& p);

/// The nonzero, pairwise distinct (up to scalar) Reynolds averages of all
/// monomials of degree 1..degree_bound. With degree_bound = |G| these
/// generate the invariant ring (Noether bound).
FormFamily invariant_monomials(const FiniteMatrixGroup& G, std::int64_t degree_bound);

struct Diagonalization {
    std::vector<Rat> lambdas;
    QMatrix basis_change = QMatrix(0);
};

/// Lagrange congruence over the rationals: returns C invertible with
/// q o C = sum lambda_i v_i^2, all lambda_i nonzero. Throws Degenerate for
/// singular Gram matrices and NotQuadratic for non-quadratic input.
Diagonalization diagonalize_quadratic(const Poly& q);

}  // namespace ormod
