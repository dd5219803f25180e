#include "ormod/gca.hpp"

#include <utility>

namespace ormod {

namespace {

void require_same_basis(const GcaElement& a, const GcaElement& b) {
    if (!same_basis(a.basis(), b.basis()))
        fail(Errc::AlgebraMismatch, "operands live in different algebras");
}

/// Sign of merging the odd letters of b (written after a) back into the
/// normal index order: one transposition per pair (i in a, j in b) of odd
/// generators with i > j.
int koszul_sign(const GcaBasis& basis, const GcaMonomial& a, const GcaMonomial& b) {
    int swaps = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] == 0 || !basis.gen(i).odd()) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (b.exps[j] != 0 && basis.gen(j).odd()) ++swaps;
        }
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

GcaElement& GcaElement::operator+=(const GcaElement& o) {
    require_same_basis(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GcaElement& GcaElement::operator-=(const GcaElement& o) {
    require_same_basis(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GcaElement operator*(const GcaElement& a, const GcaElement& b) {
    require_same_basis(a, b);
    const GcaBasis& basis = *a.basis_;
    const std::size_t n = basis.size();
    GcaElement r(a.basis_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            bool dead = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (ma.exps[i] != 0 && mb.exps[i] != 0 && basis.gen(i).odd()) {
                    dead = true;  // odd square
                    break;
                }
            }
            if (dead) continue;
            GcaMonomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            Rat c = ca * cb;
            if (koszul_sign(basis, ma, mb) < 0) c = -c;
            r.add_term(std::move(m), std::move(c));
        }
    }
    return r;
}

GcaElement operator*(const Rat& c, const GcaElement& e) {
    GcaElement r(e.basis());
    if (c.is_zero()) return r;
    for (const auto& [m, ec] : e.terms()) r.add_term(m, c * ec);
    return r;
}

GcaElement gca_mul(const GcaElement& a, const GcaElement& b) { return a * b; }

GcaElement apply_differential(const Cdga& algebra, const GcaElement& e) {
    if (!same_basis(e.basis(), algebra.basis()))
        fail(Errc::AlgebraMismatch, "element from a different algebra");
    const GcaBasis& basis = *algebra.basis();
    const std::size_t n = basis.size();
    GcaElement result(algebra.basis());

    for (const auto& [m, c] : e.terms()) {
        // Walk the normal-form word g_0^{e_0} ... g_{n-1}^{e_{n-1}}; the sign
        // in front of position i is the parity of the odd letters before it.
        int prefix_parity = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::int32_t exp = m.exps[i];
            if (exp == 0) continue;
            const GcaElement& dg = algebra.d(i);
            if (!dg.is_zero()) {
                // prefix . d(g_i) . suffix, with the hit letter removed. Any
                // leftover copies of an even g_i commute freely and join the
                // suffix; an odd g_i has exponent 1.
                GcaMonomial prefix(n), suffix(n);
                for (std::size_t j = 0; j < i; ++j) prefix.exps[j] = m.exps[j];
                for (std::size_t j = i + 1; j < n; ++j) suffix.exps[j] = m.exps[j];
                suffix.exps[i] = exp - 1;
                Rat coeff = c * Rat(exp);
                if (prefix_parity) coeff = -coeff;
                GcaElement prefix_elem(algebra.basis());
                prefix_elem.add_term(std::move(prefix), std::move(coeff));
                GcaElement suffix_elem(algebra.basis());
                suffix_elem.add_term(std::move(suffix), Rat(1));
                result += prefix_elem * dg * suffix_elem;
            }
            if (basis.gen(i).odd()) prefix_parity ^= 1;
        }
    }
    return result;
}

DiffCheck check_d_squared(const Cdga& algebra) {
    for (std::size_t i = 0; i < algebra.basis()->size(); ++i) {
        GcaElement r = apply_differential(algebra, algebra.d(i));
        if (!r.is_zero()) return DiffCheck{false, algebra.basis()->gen(i).name, std::move(r)};
    }
    return DiffCheck{};
}

bool is_minimal(const Cdga& algebra) {
    for (std::size_t i = 0; i < algebra.basis()->size(); ++i) {
        for (const auto& [m, c] : algebra.d(i).terms()) {
            (void)c;
            if (m.word_length() < 2) return false;
        }
    }
    return true;
}

DiffCheck check_degree_audit(const Cdga& algebra) {
    for (std::size_t i = 0; i < algebra.basis()->size(); ++i) {
        const GcaElement& dg = algebra.d(i);
        if (dg.is_zero()) continue;
        auto deg = dg.homogeneous_degree();
        if (!deg || *deg != algebra.basis()->gen(i).degree + 1)
            return DiffCheck{false, algebra.basis()->gen(i).name, dg};
    }
    return DiffCheck{};
}

DgaMorphism::DgaMorphism(CdgaPtr source, CdgaPtr target, std::vector<GcaElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) fail(Errc::InvalidArgument, "morphism without algebras");
    if (images_.size() != source_->basis()->size())
        fail(Errc::InvalidArgument, "one image per source generator required");
    for (const GcaElement& e : images_) {
        if (!same_basis(e.basis(), target_->basis()))
            fail(Errc::AlgebraMismatch, "image in a different algebra");
    }
}

DgaMorphism DgaMorphism::identity(CdgaPtr algebra) {
    std::vector<GcaElement> images;
    images.reserve(algebra->basis()->size());
    for (std::size_t i = 0; i < algebra->basis()->size(); ++i)
        images.push_back(GcaElement::generator(algebra->basis(), i));
    return DgaMorphism(algebra, algebra, std::move(images));
}

GcaElement DgaMorphism::apply(const GcaElement& e) const {
    if (!same_basis(e.basis(), source_->basis()))
        fail(Errc::AlgebraMismatch, "element from a different algebra");
    const std::size_t n = source_->basis()->size();
    GcaElement result(target_->basis());

    // Cache of image powers shared across the terms of e.
    std::map<std::pair<std::size_t, std::int32_t>, GcaElement> powers;
    auto image_power = [&](std::size_t i, std::int32_t exp) -> const GcaElement& {
        auto key = std::make_pair(i, exp);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        GcaElement p = GcaElement::constant(target_->basis(), Rat(1));
        for (std::int32_t k = 0; k < exp; ++k) p = p * images_[i];
        return powers.emplace(key, std::move(p)).first->second;
    };

    for (const auto& [m, c] : e.terms()) {
        GcaElement term = GcaElement::constant(target_->basis(), c);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            if (m.exps[i] == 0) continue;
            term = term * image_power(i, m.exps[i]);
        }
        result += term;
    }
    return result;
}

DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g) {
    if (!same_basis(f.source()->basis(), g.target()->basis()))
        fail(Errc::AlgebraMismatch, "composition of incompatible morphisms");
    std::vector<GcaElement> images;
    images.reserve(g.images().size());
    for (const GcaElement& img : g.images()) images.push_back(f.apply(img));
    return DgaMorphism(g.source(), f.target(), std::move(images));
}

bool is_degree_preserving(const DgaMorphism& f) {
    const GcaBasis& basis = *f.source()->basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const GcaElement& img = f.image(i);
        if (img.is_zero()) continue;
        auto deg = img.homogeneous_degree();
        if (!deg || *deg != basis.gen(i).degree) return false;
    }
    return true;
}

DiffCheck is_chain_map(const DgaMorphism& f) {
    const Cdga& src = *f.source();
    const Cdga& tgt = *f.target();
    for (std::size_t i = 0; i < src.basis()->size(); ++i) {
        GcaElement lhs = f.apply(src.d(i));
        GcaElement rhs = apply_differential(tgt, f.image(i));
        GcaElement residue = lhs - rhs;
        if (!residue.is_zero())
            return DiffCheck{false, src.basis()->gen(i).name, std::move(residue)};
    }
    return DiffCheck{};
}

}  // namespace ormod
