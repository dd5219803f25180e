#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ormod/rat.hpp"

namespace ormod {

struct Generator {
    std::string name;
    std::int64_t degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

/// Fixed ordered list of generators of a free graded-commutative algebra.
/// The index order is the normal-form word order; Koszul signs are absorbed
/// into coefficients relative to it.
class GcaBasis {
public:
    explicit GcaBasis(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].degree < 2)
                fail(Errc::InvalidArgument, "generator degree must be >= 2 (simply connected)");
            auto [it, fresh] = index_.emplace(gens_[i].name, i);
            (void)it;
            if (!fresh) fail(Errc::InvalidArgument, "duplicate generator '" + gens_[i].name + "'");
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& gens() const { return gens_; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const GcaBasis& a, const GcaBasis& b) {
        if (a.gens_.size() != b.gens_.size()) return false;
        for (std::size_t i = 0; i < a.gens_.size(); ++i) {
            if (a.gens_[i].name != b.gens_[i].name || a.gens_[i].degree != b.gens_[i].degree)
                return false;
        }
        return true;
    }
    friend bool operator!=(const GcaBasis& a, const GcaBasis& b) { return !(a == b); }

private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> index_;
};

using GcaBasisPtr = std::shared_ptr<const GcaBasis>;

inline bool same_basis(const GcaBasisPtr& a, const GcaBasisPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector over the basis; odd generators carry exponent 0 or 1.
struct GcaMonomial {
    std::vector<std::int32_t> exps;

    GcaMonomial() = default;
    explicit GcaMonomial(std::size_t n) : exps(n, 0) {}

    std::int64_t word_length() const {
        std::int64_t t = 0;
        for (auto e : exps) t += e;
        return t;
    }

    std::int64_t degree(const GcaBasis& basis) const {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) d += basis.gen(i).degree * exps[i];
        return d;
    }

    friend bool operator==(const GcaMonomial& a, const GcaMonomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const GcaMonomial& a, const GcaMonomial& b) { return !(a == b); }
};

struct GcaMonoLess {
    bool operator()(const GcaMonomial& a, const GcaMonomial& b) const {
        std::int64_t ta = a.word_length(), tb = b.word_length();
        if (ta != tb) return ta < tb;
        return a.exps < b.exps;
    }
};

/// Normal-form element of the free graded-commutative algebra: a finite map
/// from monomials to nonzero rational coefficients. Squares of odd
/// generators vanish; products reorder with the (-1)^{|a||b|} sign rule.
class GcaElement {
public:
    using TermMap = std::map<GcaMonomial, Rat, GcaMonoLess>;

    explicit GcaElement(GcaBasisPtr basis) : basis_(std::move(basis)) {
        if (!basis_) fail(Errc::InvalidArgument, "element without a basis");
    }

    static GcaElement zero(GcaBasisPtr basis) { return GcaElement(std::move(basis)); }

    static GcaElement constant(GcaBasisPtr basis, Rat c) {
        GcaElement e(std::move(basis));
        e.add_term(GcaMonomial(e.basis_->size()), std::move(c));
        return e;
    }

    static GcaElement generator(GcaBasisPtr basis, std::size_t index) {
        GcaElement e(std::move(basis));
        GcaMonomial m(e.basis_->size());
        m.exps[index] = 1;
        e.add_term(std::move(m), Rat(1));
        return e;
    }

    const GcaBasisPtr& basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    /// Adds one term in normal form; terms with a squared odd generator are
    /// zero and dropped silently.
    void add_term(GcaMonomial m, Rat c) {
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] > 1 && basis_->gen(i).odd()) return;
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Common degree of all terms; nullopt for zero or inhomogeneous elements.
    std::optional<std::int64_t> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        auto it = terms_.begin();
        std::int64_t d = it->first.degree(*basis_);
        for (++it; it != terms_.end(); ++it) {
            if (it->first.degree(*basis_) != d) return std::nullopt;
        }
        return d;
    }

    GcaElement operator-() const {
        GcaElement r(basis_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    GcaElement& operator+=(const GcaElement& o);
    GcaElement& operator-=(const GcaElement& o);
    friend GcaElement operator+(GcaElement a, const GcaElement& b) { return a += b; }
    friend GcaElement operator-(GcaElement a, const GcaElement& b) { return a -= b; }
    friend GcaElement operator*(const GcaElement& a, const GcaElement& b);
    friend GcaElement operator*(const Rat& c, const GcaElement& e);

    friend bool operator==(const GcaElement& a, const GcaElement& b) {
        return same_basis(a.basis_, b.basis_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GcaElement& a, const GcaElement& b) { return !(a == b); }

private:
    GcaBasisPtr basis_;
    TermMap terms_;
};

GcaElement gca_mul(const GcaElement& a, const GcaElement& b);

/// Free graded-commutative algebra equipped with a differential given on
/// generators. Construction does not force d^2 = 0 or the degree rule; the
/// check functions below verify them so that corrupted inputs can be
/// diagnosed rather than rejected up front.
class Cdga {
public:
    Cdga(GcaBasisPtr basis, std::vector<GcaElement> differentials)
        : basis_(std::move(basis)), diff_(std::move(differentials)) {
        if (diff_.size() != basis_->size())
            fail(Errc::InvalidArgument, "one differential per generator required");
        for (const GcaElement& e : diff_) {
            if (!same_basis(e.basis(), basis_))
                fail(Errc::AlgebraMismatch, "differential in a different algebra");
        }
    }

    const GcaBasisPtr& basis() const { return basis_; }
    const GcaElement& d(std::size_t i) const { return diff_[i]; }

    friend bool operator==(const Cdga& a, const Cdga& b) {
        return same_basis(a.basis_, b.basis_) && a.diff_ == b.diff_;
    }
    friend bool operator!=(const Cdga& a, const Cdga& b) { return !(a == b); }

private:
    GcaBasisPtr basis_;
    std::vector<GcaElement> diff_;
};

using CdgaPtr = std::shared_ptr<const Cdga>;

/// Extends the generator differentials as a degree-+1 derivation:
/// d(ab) = d(a) b + (-1)^{|a|} a d(b).
GcaElement apply_differential(const Cdga& algebra, const GcaElement& e);

struct DiffCheck {
    bool ok = true;
    std::string generator;
    std::optional<GcaElement> residue;
};

/// d(d(g)) = 0 for every generator; reports the first offender.
DiffCheck check_d_squared(const Cdga& algebra);

/// Every differential image lies in words of length >= 2.
bool is_minimal(const Cdga& algebra);

/// Every differential image is zero or homogeneous of degree |g| + 1.
DiffCheck check_degree_audit(const Cdga& algebra);

/// Algebra morphism determined by generator images; extended multiplicatively.
class DgaMorphism {
public:
    DgaMorphism(CdgaPtr source, CdgaPtr target, std::vector<GcaElement> images);

    static DgaMorphism identity(CdgaPtr algebra);

    const CdgaPtr& source() const { return source_; }
    const CdgaPtr& target() const { return target_; }
    const GcaElement& image(std::size_t i) const { return images_[i]; }
    const std::vector<GcaElement>& images() const { return images_; }

    /// Image of an arbitrary element under the multiplicative extension.
    GcaElement apply(const GcaElement& e) const;

    friend bool operator==(const DgaMorphism& a, const DgaMorphism& b) {
        return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_;
    }
    friend bool operator!=(const DgaMorphism& a, const DgaMorphism& b) { return !(a == b); }

private:
    CdgaPtr source_;
    CdgaPtr target_;
    std::vector<GcaElement> images_;
};

/// Composition (f after g).
DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g);

/// True when every generator image is zero or homogeneous of the generator's
/// degree.
bool is_degree_preserving(const DgaMorphism& f);

/// f(d g) = d(f g) for every generator; reports the first offender with its
/// residue.
DiffCheck is_chain_map(const DgaMorphism& f);

}  // namespace ormod
