#include "ormod/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ormod {

bool FiniteMatrixGroup::contains(const QMatrix& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
}

FiniteMatrixGroup group_closure(const std::vector<QMatrix>& generators, std::size_t max_order) {
    if (generators.empty()) fail(Errc::InvalidArgument, "no generators");
    const std::size_t n = generators[0].n();
    for (const QMatrix& g : generators) {
        if (g.n() != n) fail(Errc::DimensionMismatch, "generators of mixed sizes");
        if (!g.is_invertible()) fail(Errc::NotInvertible, "non-invertible generator");
    }
    std::set<QMatrix> seen;
    std::deque<QMatrix> queue;
    seen.insert(QMatrix::identity(n));
    queue.push_back(QMatrix::identity(n));
    while (!queue.empty()) {
        QMatrix e = std::move(queue.front());
        queue.pop_front();
        for (const QMatrix& g : generators) {
            QMatrix p = e * g;
            if (seen.insert(p).second) {
                if (seen.size() > max_order)
                    fail(Errc::OrderBoundExceeded,
                         "closure exceeds " + std::to_string(max_order) + " elements");
                queue.push_back(std::move(p));
            }
        }
    }
    std::vector<QMatrix> elements(seen.begin(), seen.end());
    return FiniteMatrixGroup(generators, std::move(elements));
}

Poly act(const QMatrix& g, const Poly& p) {
    return substitute_linear(p, g.inverse());
}

bool is_orthogonal(const QMatrix& f, const FormFamily& family) {
    if (!family.size()) return true;
    if (f.n() != family.space()->size())
        fail(Errc::DimensionMismatch, "matrix size does not match form variables");
    for (const Poly& q : family.forms()) {
        if (substitute_linear(q, f) != q) return false;
    }
    return true;
}

Poly reynolds(const FiniteMatrixGroup& G, const Poly& p) {
    Poly sum(p.space());
    for (const QMatrix& g : G.elements()) sum += act(g, p);
    return sum;
}

namespace {

void enumerate_monomials(std::size_t nvars, std::int64_t degree, std::size_t var, Monomial& m,
                         std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        m.exps[var] = static_cast<std::int32_t>(degree);
        out.push_back(m);
        m.exps[var] = 0;
        return;
    }
    for (std::int64_t e = degree; e >= 0; --e) {
        m.exps[var] = static_cast<std::int32_t>(e);
        enumerate_monomials(nvars, degree - e, var + 1, m, out);
    }
    m.exps[var] = 0;
}

}  // namespace

FormFamily invariant_monomials(const FiniteMatrixGroup& G, std::int64_t degree_bound) {
    if (degree_bound < 1) fail(Errc::InvalidArgument, "degree bound must be >= 1");
    const std::size_t n = G.dim();
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    VarSpacePtr vs = VarSpace::weight_one(std::move(names));

    // The group inverses, computed once for the whole sweep.
    std::vector<QMatrix> inverses;
    inverses.reserve(G.order());
    for (const QMatrix& g : G.elements()) inverses.push_back(g.inverse());

    std::vector<Poly> outputs;
    std::set<std::string> seen;  // monic normal forms, for up-to-scalar dedup
    for (std::int64_t deg = 1; deg <= degree_bound; ++deg) {
        std::vector<Monomial> monos;
        Monomial scratch(n);
        enumerate_monomials(n, deg, 0, scratch, monos);
        for (Monomial& m : monos) {
            Poly mono = Poly::monomial(vs, std::move(m), Rat(1));
            Poly avg(vs);
            for (const QMatrix& ginv : inverses) avg += substitute_linear(mono, ginv);
            if (avg.is_zero()) continue;
            Poly monic = avg.leading_coefficient().inverse() * avg;
            if (seen.insert(format_poly(monic)).second) outputs.push_back(std::move(avg));
        }
    }
    return FormFamily(vs, std::move(outputs));
}

Diagonalization diagonalize_quadratic(const Poly& q) {
    if (q.is_zero()) fail(Errc::NotQuadratic, "zero polynomial");
    const std::size_t n = q.space()->size();

    // Symmetric Gram matrix: off-diagonal coefficients split in half.
    QMatrix S(n);
    for (const auto& [m, c] : q.terms()) {
        if (m.total() != 2) fail(Errc::NotQuadratic, "term of degree != 2");
        std::size_t i = n, j = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (m.exps[v] == 2) {
                i = j = v;
            } else if (m.exps[v] == 1) {
                if (i == n)
                    i = v;
                else
                    j = v;
            }
        }
        if (i == j) {
            S.at(i, i) = c;
        } else {
            Rat half = c / Rat(2);
            S.at(i, j) = half;
            S.at(j, i) = half;
        }
    }

    QMatrix C = QMatrix::identity(n);

    // Congruence step S <- E^t S E, C <- C E.
    auto apply = [&](const QMatrix& E) {
        S = E.transpose() * S * E;
        C = C * E;
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (S.at(i, i).is_zero()) {
            std::size_t j = i + 1;
            while (j < n && S.at(j, j).is_zero()) ++j;
            if (j < n) {
                QMatrix E = QMatrix::identity(n);
                E.at(i, i) = Rat(0);
                E.at(j, j) = Rat(0);
                E.at(i, j) = Rat(1);
                E.at(j, i) = Rat(1);
                apply(E);
            } else {
                // All remaining diagonal entries vanish; use a mixed term.
                j = i + 1;
                while (j < n && S.at(i, j).is_zero()) ++j;
                if (j == n) fail(Errc::Degenerate, "quadratic form is degenerate");
                QMatrix E = QMatrix::identity(n);
                E.at(j, i) = Rat(1);  // basis vector i becomes b_i + b_j
                apply(E);
            }
        }
        QMatrix E = QMatrix::identity(n);
        Rat pivot_inv = S.at(i, i).inverse();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!S.at(i, j).is_zero()) E.at(i, j) = -(S.at(i, j) * pivot_inv);
        }
        apply(E);
    }

    Diagonalization result{std::vector<Rat>(), C};
    result.lambdas.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (S.at(i, i).is_zero()) fail(Errc::Degenerate, "quadratic form is degenerate");
        result.lambdas.push_back(S.at(i, i));
    }
    return result;
}

}  // namespace ormod
