#include "ormod/realizable.hpp"

#include <algorithm>

namespace ormod {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

FamilyCheck check_conditions(const FormFamily& family, bool need_diagonal) {
    FamilyCheck out;
    if (family.size() < 2) {
        out.violated = 1;
        out.detail = "family needs at least q_0 and the power tail";
        return out;
    }
    const std::size_t last = family.size() - 1;
    const std::size_t n = family.space()->size();
    std::vector<std::int64_t> deg(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) deg[i] = weighted_degree(family[i]);

    // (2) strictly increasing degrees, gap > 1 at the top pair.
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
        if (deg[i + 1] <= deg[i]) {
            out.violated = 2;
            out.index = i;
            out.detail = "degrees must strictly increase";
            return out;
        }
    }
    if (deg[last] - deg[last - 1] <= 1) {
        out.violated = 2;
        out.index = last - 1;
        out.detail = "gap above the second-to-last form must exceed 1";
        return out;
    }

    // (1) power tail with a large enough exponent.
    if (deg[last] % deg[0] != 0) {
        out.violated = 1;
        out.index = last;
        out.detail = "tail degree is not a multiple of deg(q_0)";
        return out;
    }
    std::int64_t s = deg[last] / deg[0];
    if (poly_pow(family[0], s) != family[last]) {
        out.violated = 1;
        out.index = last;
        out.detail = "tail is not a power of q_0";
        return out;
    }
    std::int64_t bound = std::max<std::int64_t>(static_cast<std::int64_t>(n),
                                                ceil_div(deg[last - 1], deg[0]) + 1);
    if (s < bound) {
        out.violated = 1;
        out.index = last;
        out.detail = "tail exponent " + std::to_string(s) + " below the bound " + std::to_string(bound);
        return out;
    }

    out.s = s;
    out.d = deg[0];

    if (need_diagonal) {
        // (3) q_0 = sum lambda_i v_i^d with d > 1, every coefficient nonzero.
        if (deg[0] <= 1) {
            out.violated = 3;
            out.index = 0;
            out.detail = "deg(q_0) must exceed 1";
            return out;
        }
        std::vector<Rat> lambdas(n, Rat(0));
        for (const auto& [m, c] : family[0].terms()) {
            std::size_t var = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (m.exps[v] == 0) continue;
                if (var != n || m.exps[v] != deg[0]) {
                    out.violated = 3;
                    out.index = 0;
                    out.detail = "q_0 has a non-diagonal term";
                    return out;
                }
                var = v;
            }
            lambdas[var] = c;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (lambdas[v].is_zero()) {
                out.violated = 3;
                out.index = v;
                out.detail = "q_0 misses variable " + family.space()->name(v);
                return out;
            }
        }
        out.lambdas = std::move(lambdas);
    }

    out.ok = true;
    return out;
}

}  // namespace

FamilyCheck check_prerealizable(const FormFamily& family) { return check_conditions(family, false); }

FamilyCheck check_realizable(const FormFamily& family) { return check_conditions(family, true); }

RealizableFamily make_prerealizable(const FormFamily& P, std::optional<std::int64_t> s_override) {
    if (P.size() == 0) fail(Errc::InvalidArgument, "empty input family");
    std::int64_t d = weighted_degree(P[0]);
    if (d < 2) fail(Errc::DegreeTooSmall, "deg(p_0) must be at least 2");
    for (std::size_t i = 1; i < P.size(); ++i) {
        if (weighted_degree(P[i]) < 1)
            fail(Errc::DegreeTooSmall, "deg(p_" + std::to_string(i) + ") must be at least 1");
    }

    std::vector<Poly> q;
    q.reserve(P.size() + 1);
    q.push_back(P[0]);
    for (std::size_t i = 1; i < P.size(); ++i) q.push_back(P[i] * q.back() * q[0]);

    const std::int64_t n = static_cast<std::int64_t>(P.space()->size());
    std::int64_t bound = std::max<std::int64_t>(n, ceil_div(weighted_degree(q.back()), d) + 1);
    std::int64_t s = bound;
    if (s_override) {
        if (*s_override < bound)
            fail(Errc::BadS, "s = " + std::to_string(*s_override) + " below the bound " +
                                 std::to_string(bound));
        s = *s_override;
    }
    q.push_back(poly_pow(q[0], s));

    RealizableFamily result{FormFamily(P.space(), std::move(q)), s, d, std::nullopt};
    FamilyCheck chk = check_realizable(result.forms);
    if (chk.ok) result.lambdas = chk.lambdas;
    return result;
}

OrthogonalPresentation orthogonal_presentation(const FiniteMatrixGroup& G,
                                               std::optional<std::int64_t> s_override) {
    const std::size_t n = G.dim();
    FormFamily invariants = invariant_monomials(G, static_cast<std::int64_t>(G.order()));
    const VarSpacePtr& vs = invariants.space();

    Poly sum_squares(vs);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n);
        m.exps[i] = 2;
        sum_squares.add_term(std::move(m), Rat(1));
    }
    Poly q0 = reynolds(G, sum_squares);

    Diagonalization diag = diagonalize_quadratic(q0);
    for (const Rat& lambda : diag.lambdas) {
        if (!(Rat(0) < lambda))
            fail(Errc::Degenerate, "invariant quadratic is not positive definite");
    }

    std::vector<Poly> rewritten;
    rewritten.reserve(invariants.size() + 1);
    rewritten.push_back(substitute_linear(q0, diag.basis_change));
    for (const Poly& p : invariants.forms())
        rewritten.push_back(substitute_linear(p, diag.basis_change));

    RealizableFamily family =
        make_prerealizable(FormFamily(vs, std::move(rewritten)), s_override);
    return OrthogonalPresentation{std::move(family), diag.basis_change, G.order(),
                                  invariants.size()};
}

RealizableFamily symmetric_family(int n, std::optional<std::int64_t> s) {
    if (n < 2) fail(Errc::InvalidArgument, "symmetric family needs n >= 2");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    VarSpacePtr vs = VarSpace::weight_one(std::move(names));

    // Elementary symmetric functions by the usual one-variable-at-a-time update.
    std::vector<Poly> e(static_cast<std::size_t>(n) + 1, Poly(vs));
    e[0] = Poly::constant(vs, Rat(1));
    for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(vs, static_cast<std::size_t>(i));
        for (int j = std::min(i + 1, n); j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * xi;
        }
    }

    Rat factorial(1);
    for (int i = 2; i <= n; ++i) factorial *= Rat(i);
    Poly q0(vs);
    for (int i = 0; i < n; ++i) {
        Monomial m(static_cast<std::size_t>(n));
        m.exps[static_cast<std::size_t>(i)] = 2;
        q0.add_term(std::move(m), factorial);
    }

    std::int64_t bound = ceil_div(static_cast<std::int64_t>(n + 4) * (n + 1), 4) + 1;
    std::int64_t sv = bound;
    if (s) {
        if (*s < bound)
            fail(Errc::BadS,
                 "s = " + std::to_string(*s) + " below the bound " + std::to_string(bound));
        sv = *s;
    }

    std::vector<Poly> q;
    q.reserve(static_cast<std::size_t>(n) + 2);
    q.push_back(q0);
    for (int j = 1; j <= n; ++j) q.push_back(e[static_cast<std::size_t>(j)] * q.back() * q0);
    q.push_back(poly_pow(q0, sv));

    RealizableFamily result{FormFamily(vs, std::move(q)), sv, 2,
                            std::vector<Rat>(static_cast<std::size_t>(n), factorial)};
    return result;
}

G2Family g2_family() {
    VarSpacePtr xs = VarSpace::weight_one({"x0", "x1", "x1p", "x2", "x2p", "x3", "x3p"});
    Poly f0 = parse_poly("-2*x0^2 + x1*x1p + x2*x2p + x3*x3p", xs);
    Poly f1 = parse_poly("x0*x1*x1p + x0*x2*x2p + x0*x3*x3p + x1*x2*x3 + x1p*x2p*x3p", xs);

    // x0 = v1, x_i = (v_{2i} + v_{2i+1})/2, x_i' = (v_{2i} - v_{2i+1})/2.
    QMatrix L(7);
    L.at(0, 0) = Rat(1);
    Rat half(BigInt(1), BigInt(2));
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t x = 1 + 2 * i, xp = 2 + 2 * i;
        L.at(x, x) = half;
        L.at(x, xp) = half;
        L.at(xp, x) = half;
        L.at(xp, xp) = -half;
    }

    VarSpacePtr vsv = VarSpace::weight_one({"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
    Poly q0 = transport(substitute_linear(f0, L), vsv);
    Poly q1 = transport(substitute_linear(f1, L), vsv);
    Poly q2 = poly_pow(q0, 7);

    RealizableFamily family{FormFamily(vsv, {q0, q1, q2}), 7, 2, std::nullopt};
    FamilyCheck chk = check_realizable(family.forms);
    if (!chk.ok) fail(Errc::NotRealizable, "g2 family failed its realizability check");
    family.lambdas = chk.lambdas;

    return G2Family{std::move(family), FormFamily(xs, {f0, f1}), L};
}

}  // namespace ormod
