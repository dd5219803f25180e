#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ormod/matrix.hpp"
#include "ormod/rat.hpp"
#include "ormod/varspace.hpp"

namespace ormod {

/// Sparse multivariate polynomial over exact rationals. Terms are kept in a
/// canonical graded-lexicographic order and zero coefficients are never
/// stored, so equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    explicit Poly(VarSpacePtr vs) : vs_(std::move(vs)) {
        if (!vs_) fail(Errc::InvalidArgument, "polynomial without a variable space");
    }

    static Poly zero(VarSpacePtr vs) { return Poly(std::move(vs)); }

    static Poly constant(VarSpacePtr vs, Rat c) {
        Poly p(std::move(vs));
        p.add_term(Monomial(p.vs_->size()), std::move(c));
        return p;
    }

    static Poly variable(VarSpacePtr vs, std::size_t index, std::int32_t exp = 1) {
        Poly p(std::move(vs));
        if (index >= p.vs_->size()) fail(Errc::UnknownVariable, "variable index out of range");
        Monomial m(p.vs_->size());
        m.exps[index] = exp;
        p.add_term(std::move(m), Rat(1));
        return p;
    }

    static Poly monomial(VarSpacePtr vs, Monomial m, Rat c) {
        Poly p(std::move(vs));
        if (m.exps.size() != p.vs_->size()) fail(Errc::VarSpaceMismatch, "monomial length mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const VarSpacePtr& space() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(Monomial m, Rat c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient of the graded-lex largest term (zero for the zero polynomial).
    Rat leading_coefficient() const {
        if (terms_.empty()) return Rat(0);
        return terms_.rbegin()->second;
    }

    Poly operator-() const {
        Poly r(vs_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_space(a.vs_, b.vs_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    VarSpacePtr vs_;
    TermMap terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, std::int64_t s);

/// Common weighted degree of all terms. Throws ZeroPolynomial on the zero
/// polynomial and NonHomogeneous if terms disagree.
std::int64_t weighted_degree(const Poly& p);

/// nullopt for the zero polynomial or a non-homogeneous one.
std::optional<std::int64_t> try_weighted_degree(const Poly& p);

bool is_homogeneous(const Poly& p);

/// q composed with the linear map A over all variables of q's space:
/// v_i is replaced by sum_j A(i,j) v_j, so the result evaluates to q(Au)
/// under the column-coordinate convention.
Poly substitute_linear(const Poly& q, const QMatrix& A);

/// Same, but A acts only on the listed variables (all of equal weight);
/// the remaining variables are fixed.
Poly substitute_linear(const Poly& q, const QMatrix& A, const std::vector<std::size_t>& vars);

/// Positional transport onto another space with identical weights.
Poly transport(const Poly& p, VarSpacePtr target);

Poly parse_poly(std::string_view text, VarSpacePtr vs);
std::string format_poly(const Poly& p);

namespace detail {

/// One parsed additive term: a rational coefficient and named powers.
struct ParsedTerm {
    Rat coeff;
    std::vector<std::pair<std::string, std::int64_t>> powers;
};

/// Parses the shared sum-of-terms grammar: terms separated by +/-, factors
/// separated by '*', each factor a rational or name[^exp]. Reports
/// SyntaxError with a position.
std::vector<ParsedTerm> parse_sum(std::string_view text);

std::string format_coeff_prefix(const Rat& c, bool has_factors, bool first);

}  // namespace detail

}  // namespace ormod
