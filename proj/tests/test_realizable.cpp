#include <doctest.h>

#include "testutil.hpp"

using namespace ormod;
using namespace ormod::testutil;

namespace {

std::vector<std::int64_t> degrees(const FormFamily& fam) {
    std::vector<std::int64_t> out;
    for (const Poly& q : fam.forms()) out.push_back(weighted_degree(q));
    return out;
}

QMatrix neg_identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = rq(-1);
    return m;
}

}  // namespace

TEST_CASE("realizability checks") {
    SUBCASE("the symmetric family is realizable with its diagonal witness") {
        RealizableFamily sigma = symmetric_family(3);
        FamilyCheck chk = check_realizable(sigma.forms);
        REQUIRE(chk.ok);
        CHECK(chk.s == 8);
        CHECK(chk.d == 2);
        CHECK(chk.lambdas == std::vector<Rat>{rq(6), rq(6), rq(6)});
    }

    SUBCASE("one-variable power pair") {
        auto vs = VarSpace::weight_one({"v1"});
        FormFamily fam(vs, {parse_poly("v1^2", vs), parse_poly("v1^4", vs)});
        FamilyCheck chk = check_prerealizable(fam);
        REQUIRE(chk.ok);
        CHECK(chk.s == 2);
        CHECK(chk.d == 2);
    }

    SUBCASE("pre-realizable but not realizable when q0 is not diagonal") {
        auto vs = VarSpace::weight_one({"v1", "v2"});
        Poly q0 = parse_poly("v1*v2", vs);
        FormFamily fam(vs, {q0, poly_pow(q0, 3)});
        CHECK(check_prerealizable(fam).ok);
        FamilyCheck chk = check_realizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 3);
    }

    SUBCASE("missing variables violate the diagonal condition") {
        auto vs = VarSpace::weight_one({"v1", "v2"});
        Poly q0 = parse_poly("v1^2", vs);
        FormFamily fam(vs, {q0, poly_pow(q0, 4)});
        FamilyCheck chk = check_realizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 3);
    }

    SUBCASE("tail exponent below the bound violates the power-tail condition") {
        auto vs = VarSpace::weight_one({"v1", "v2", "v3"});
        Poly q0 = parse_poly("v1^2 + v2^2 + v3^2", vs);
        // s = 2 < max{n = 3, 2}.
        FormFamily fam(vs, {q0, poly_pow(q0, 2)});
        FamilyCheck chk = check_prerealizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 1);
    }

    SUBCASE("a tail that is not a power of q0 is rejected") {
        auto vs = VarSpace::weight_one({"v1"});
        FormFamily fam(vs, {parse_poly("v1^2", vs), parse_poly("2*v1^4", vs)});
        FamilyCheck chk = check_prerealizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 1);
    }

    SUBCASE("non-increasing degrees are rejected") {
        auto vs = VarSpace::weight_one({"v1"});
        FormFamily fam(vs, {parse_poly("v1^4", vs), parse_poly("v1^3", vs), parse_poly("v1^8", vs)});
        FamilyCheck chk = check_prerealizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 2);
        CHECK(chk.index == 0);
    }

    SUBCASE("a top gap of one is rejected") {
        auto vs = VarSpace::weight_one({"v1"});
        // Degrees 2, 7, 8: strictly increasing, but the top gap is 1.
        FormFamily fam(vs, {parse_poly("v1^2", vs), parse_poly("v1^7", vs), parse_poly("v1^8", vs)});
        FamilyCheck chk = check_prerealizable(fam);
        CHECK(!chk.ok);
        CHECK(chk.violated == 2);
        CHECK(chk.index == 1);
    }
}

TEST_CASE("pre-realizable transform") {
    SUBCASE("a single quadratic gains its power tail") {
        auto vs = VarSpace::weight_one({"v1"});
        RealizableFamily fam = make_prerealizable(FormFamily(vs, {parse_poly("v1^2", vs)}));
        CHECK(degrees(fam.forms) == std::vector<std::int64_t>{2, 4});
        CHECK(fam.s == 2);
        CHECK(fam.forms[1] == parse_poly("v1^4", vs));
    }

    SUBCASE("the symmetric generators build the expected degree ladder") {
        RealizableFamily fam = make_prerealizable(symmetric_generators(3));
        CHECK(degrees(fam.forms) == std::vector<std::int64_t>{2, 5, 9, 14, 16});
        CHECK(fam.s == 8);
        CHECK(check_prerealizable(fam.forms).ok);
        CHECK(fam.forms == symmetric_family(3).forms);
    }

    SUBCASE("two-form example with a hand-computed tail exponent") {
        auto vs = VarSpace::weight_one({"v1", "v2"});
        Poly q0 = parse_poly("v1^2 + v2^2", vs);
        Poly p1 = parse_poly("v1*v2", vs);
        RealizableFamily fam = make_prerealizable(FormFamily(vs, {q0, p1}));
        CHECK(fam.forms[1] == p1 * q0 * q0);
        CHECK(degrees(fam.forms) == std::vector<std::int64_t>{2, 6, 8});
        CHECK(fam.s == 4);
    }

    SUBCASE("degree preconditions") {
        auto vs = VarSpace::weight_one({"v1"});
        CHECK_THROWS_AS((void)make_prerealizable(FormFamily(vs, {parse_poly("v1", vs)})), Error);
        CHECK_THROWS_AS((void)make_prerealizable(FormFamily(
                            vs, {parse_poly("v1^2", vs), parse_poly("2", vs)})),
                        Error);
    }

    SUBCASE("an s override below the bound is rejected, above is honored") {
        auto vs = VarSpace::weight_one({"v1"});
        FormFamily p(vs, {parse_poly("v1^2", vs)});
        CHECK_THROWS_AS((void)make_prerealizable(p, 1), Error);
        RealizableFamily fam = make_prerealizable(p, 5);
        CHECK(fam.s == 5);
        CHECK(check_prerealizable(fam.forms).ok);
    }
}

TEST_CASE("orthogonal-group equivalence of the transform") {
    // Membership in the orthogonal group of the input family and of the
    // transformed family agree over a mixed pool of matrices.
    FormFamily p = symmetric_generators(3);
    RealizableFamily q = make_prerealizable(p);

    std::vector<QMatrix> pool = all_signed_permutation_matrices(3);
    std::mt19937_64 rng(7201);
    for (int i = 0; i < 60; ++i) pool.push_back(random_invertible(rng, 3));
    REQUIRE(pool.size() >= 100);

    std::size_t members = 0;
    for (const QMatrix& f : pool) {
        bool in_p = is_orthogonal(f, p);
        bool in_q = is_orthogonal(f, q.forms);
        CHECK(in_p == in_q);
        if (in_p) ++members;
    }
    CHECK(members >= 6);  // at least the six permutations
}

TEST_CASE("cancellation in the polynomial ring") {
    std::mt19937_64 rng(7202);
    auto vs = VarSpace::weight_one({"v1", "v2"});
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_nonzero_poly(rng, vs);
        Poly x = random_poly(rng, vs);
        Poly y = random_poly(rng, vs);
        if (x == y) continue;
        CHECK(p * x != p * y);
    }
}

TEST_CASE("orthogonal presentation of a finite group") {
    SUBCASE("sign group in two variables") {
        FiniteMatrixGroup g = group_closure({neg_identity(2)});
        OrthogonalPresentation pres = orthogonal_presentation(g);
        const VarSpacePtr& vs = pres.family.forms.space();

        CHECK(pres.group_order == 2);
        CHECK(pres.family.d == 2);
        CHECK(pres.family.forms[0] == parse_poly("2*v1^2 + 2*v2^2", vs));
        REQUIRE(pres.family.lambdas.has_value());
        for (const Rat& l : *pres.family.lambdas) CHECK(l.sign() == 1);
        CHECK(check_realizable(pres.family.forms).ok);

        // -I is orthogonal for this family (all degrees are even).
        QMatrix conjugated = pres.basis_change.inverse() * neg_identity(2) * pres.basis_change;
        CHECK(is_orthogonal(conjugated, pres.family.forms));
    }

    SUBCASE("trivial group on one variable cuts the stabilizer to the identity") {
        FiniteMatrixGroup g = group_closure({QMatrix::identity(1)});
        OrthogonalPresentation pres = orthogonal_presentation(g);
        // The invariant v1 itself enters, so the family contains an odd form
        // and -1 is excluded.
        QMatrix minus(1);
        minus.at(0, 0) = rq(-1);
        CHECK(!is_orthogonal(minus, pres.family.forms));
        CHECK(is_orthogonal(QMatrix::identity(1), pres.family.forms));
    }

    SUBCASE("a skew copy of the rotation group needs a real basis change") {
        // Order-4 element conjugated away from the orthogonal position: the
        // invariant quadratic has cross terms, so the diagonalizing change
        // is not the identity and the group must be conjugated to match.
        QMatrix g(2);
        g.at(0, 0) = rq(1);
        g.at(0, 1) = rq(-2);
        g.at(1, 0) = rq(1);
        g.at(1, 1) = rq(-1);
        FiniteMatrixGroup grp = group_closure({g});
        REQUIRE(grp.order() == 4);

        OrthogonalPresentation pres = orthogonal_presentation(grp);
        CHECK(pres.basis_change != QMatrix::identity(2));
        REQUIRE(pres.family.lambdas.has_value());
        for (const Rat& l : *pres.family.lambdas) CHECK(l.sign() == 1);
        CHECK(check_realizable(pres.family.forms).ok);
        for (const QMatrix& e : grp.elements()) {
            QMatrix conj = pres.basis_change.inverse() * e * pres.basis_change;
            CHECK(is_orthogonal(conj, pres.family.forms));
        }
        // The unconjugated elements do not fix the rewritten family.
        CHECK(!is_orthogonal(g, pres.family.forms));
    }

    SUBCASE("forward inclusion for the symmetric group") {
        QMatrix t01 = QMatrix::identity(3), t12 = QMatrix::identity(3);
        t01.at(0, 0) = rq(0);
        t01.at(1, 1) = rq(0);
        t01.at(0, 1) = rq(1);
        t01.at(1, 0) = rq(1);
        t12.at(1, 1) = rq(0);
        t12.at(2, 2) = rq(0);
        t12.at(1, 2) = rq(1);
        t12.at(2, 1) = rq(1);
        FiniteMatrixGroup g = group_closure({t01, t12});
        OrthogonalPresentation pres = orthogonal_presentation(g);

        CHECK(pres.group_order == 6);
        CHECK(pres.invariant_count == 22);
        CHECK(check_realizable(pres.family.forms).ok);
        for (const QMatrix& e : g.elements()) {
            QMatrix conj = pres.basis_change.inverse() * e * pres.basis_change;
            CHECK(is_orthogonal(conj, pres.family.forms));
        }
    }
}

TEST_CASE("built-in symmetric families") {
    SUBCASE("n = 2") {
        RealizableFamily fam = symmetric_family(2);
        CHECK(degrees(fam.forms) == std::vector<std::int64_t>{2, 5, 9, 12});
        CHECK(fam.s == 6);
    }

    SUBCASE("n = 3") {
        RealizableFamily fam = symmetric_family(3);
        CHECK(degrees(fam.forms) == std::vector<std::int64_t>{2, 5, 9, 14, 16});
        CHECK(fam.s == 8);
        CHECK(check_realizable(fam.forms).ok);
    }

    SUBCASE("every permutation matrix is orthogonal for n = 3") {
        RealizableFamily fam = symmetric_family(3);
        for (const QMatrix& p : all_permutation_matrices(3)) CHECK(is_orthogonal(p, fam.forms));
    }

    SUBCASE("preconditions") {
        CHECK_THROWS_AS((void)symmetric_family(1), Error);
        CHECK_THROWS_AS((void)symmetric_family(3, 7), Error);  // below the bound 8
        CHECK(symmetric_family(3, 9).s == 9);
    }
}

TEST_CASE("seven-variable family from the alternating trilinear form") {
    G2Family g2 = g2_family();
    const VarSpacePtr& vs = g2.family.forms.space();

    SUBCASE("the rewritten trilinear form matches the displayed quarter-form") {
        Poly expected = parse_poly(
            "1/4*v1*v2^2 - 1/4*v1*v3^2 + 1/4*v1*v4^2 - 1/4*v1*v5^2 + 1/4*v1*v6^2 - 1/4*v1*v7^2"
            " + 1/4*v2*v5*v7 + 1/4*v3*v4*v7 + 1/4*v3*v5*v6 + 1/4*v2*v4*v6",
            vs);
        CHECK(g2.family.forms[1] == expected);
    }

    SUBCASE("the rewritten quadratic is homogeneous with the -2 v1^2 head") {
        Poly expected = parse_poly(
            "-2*v1^2 + 1/4*v2^2 - 1/4*v3^2 + 1/4*v4^2 - 1/4*v5^2 + 1/4*v6^2 - 1/4*v7^2", vs);
        CHECK(g2.family.forms[0] == expected);
    }

    SUBCASE("family data") {
        CHECK(degrees(g2.family.forms) == std::vector<std::int64_t>{2, 3, 14});
        CHECK(g2.family.s == 7);
        CHECK(g2.family.d == 2);
        FamilyCheck chk = check_realizable(g2.family.forms);
        CHECK(chk.ok);
        CHECK(chk.s == 7);
        CHECK(chk.d == 2);
        REQUIRE(g2.family.lambdas.has_value());
        CHECK((*g2.family.lambdas)[0] == rq(-2));
        CHECK((*g2.family.lambdas)[1] == rq(1, 4));
        CHECK((*g2.family.lambdas)[2] == rq(-1, 4));
    }

    SUBCASE("the change of variables reproduces the rewritten forms") {
        CHECK(transport(substitute_linear(g2.original[0], g2.change), vs) == g2.family.forms[0]);
        CHECK(transport(substitute_linear(g2.original[1], g2.change), vs) == g2.family.forms[1]);
    }
}
