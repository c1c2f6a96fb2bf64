#include "doctest.h"

#include "support.hpp"

using namespace gaend;
using fixtures::poly;
using fixtures::rat;

TEST_CASE("invariants")
{
    GaInvariants c = invariants(fixtures::cubic());
    CHECK(c.det == 6);
    CHECK(c.P == std::vector<Integer>{2, 3});
    CHECK(c.P_prime == std::vector<Integer>{2, 3});
    CHECK(c.t.at(2) == 2);
    CHECK(c.t.at(3) == 1);
    CHECK(c.irreducible);

    GaInvariants q = invariants(fixtures::quartic());
    CHECK(q.det == 5);
    CHECK(q.P == std::vector<Integer>{5});
    CHECK(q.P_prime == std::vector<Integer>{5});
    CHECK(q.t.at(5) == 2);

    GaInvariants u = invariants(IntMatrix{{2, 1}, {1, 1}});
    CHECK(u.P.empty());
    CHECK_THROWS_AS(invariants(IntMatrix{{1, 2}, {2, 4}}), MathError);
}

TEST_CASE("two-dimensional classification")
{
    CHECK(classify2d(fixtures::quad_A()).tag == Case2d::IrreducibleA);

    Classification2d b = classify2d(IntMatrix{{2, 1}, {0, 3}});
    CHECK(b.tag == Case2d::CaseB);
    CHECK(b.lambda1 == 2);
    CHECK(b.lambda2 == 3);
    CHECK(b.v == 1);

    Classification2d c = classify2d(IntMatrix{{6, 0}, {0, 2}});
    CHECK(c.tag == Case2d::CaseC);
    CHECK(c.lambda1 == 6);
    CHECK(c.lambda2 == 2);

    CHECK(classify2d(IntMatrix{{1, 1}, {0, 1}}).tag == Case2d::Easy);
    CHECK_THROWS_AS(classify2d(fixtures::cubic()), MathError);
}

TEST_CASE("endomorphism decisions")
{
    for (const IntMatrix& A : {fixtures::cubic(), fixtures::quartic(), fixtures::quad_B(), IntMatrix{{6, 0}, {0, 2}}}) {
        CHECK(is_endomorphism(A, inverse(A)).verdict == Verdict::Yes);
        CHECK(is_endomorphism(A, rat(A)).verdict == Verdict::Yes);
    }
    IntMatrix D{{6, 0}, {0, 2}};
    Decision lower = is_endomorphism(D, RatMatrix{{0, 0}, {1, 0}});
    CHECK(lower.verdict == Verdict::No);
    CHECK(lower.cert.failing_prime.has_value());
    CHECK(is_endomorphism(D, RatMatrix{{0, 1}, {0, 0}}).verdict == Verdict::Yes);

    Decision L = is_endomorphism(fixtures::quartic(), rat(fixtures::quartic_L()));
    CHECK(L.verdict == Verdict::Yes);
    CHECK(L.cert.transcripts.size() == 1);

    Decision den = is_endomorphism(fixtures::cubic(), RatMatrix::scalar(3, Rational(1, 5)));
    CHECK(den.verdict == Verdict::No);
    CHECK(den.cert.failing_prime == Integer(5));
}

TEST_CASE("precision override")
{
    IntMatrix A = fixtures::cubic();
    RatMatrix T = fixtures::cubic_xi();
    CHECK(is_endomorphism(A, T, 64).verdict == Verdict::Yes);
    CHECK_THROWS_AS(is_endomorphism(A, T, 8), PrecisionPolicyError);
}

TEST_CASE("bounded oracle")
{
    IntMatrix A = fixtures::cubic();
    Decision a = bounded_oracle(A, rat(A), 6, 12);
    CHECK(a.verdict == Verdict::Inconclusive);
    CHECK(a.cert.oracle == "positive");

    RatMatrix Ar = rat(A);
    RatMatrix T = RatMatrix::identity(3) * Rational(2) + Ar - Ar * Ar;
    Decision b = bounded_oracle(A, T, 6, 12);
    CHECK(b.cert.oracle == "positive");
    CHECK(b.cert.witnesses.size() == 7);

    Decision c = bounded_oracle(IntMatrix{{6, 0}, {0, 2}}, RatMatrix{{0, 0}, {1, 0}}, 6, 12);
    CHECK(c.verdict == Verdict::Inconclusive);
    CHECK(c.cert.oracle == "negative");
    CHECK(c.cert.failing_m == 1);

    Decision d = bounded_oracle(A, RatMatrix::scalar(3, Rational(1, 7)), 6, 12);
    CHECK(d.verdict == Verdict::No);
}

TEST_CASE("iota")
{
    IntMatrix A = fixtures::cubic();
    auto K = NumberField::create(char_poly(A));
    CHECK(iota(K, A, rat(A)) == NfElement::lambda(K));
    RatMatrix Ar = rat(A);
    RatMatrix T = RatMatrix::identity(3) * Rational(2) + Ar - Ar * Ar;
    CHECK(iota(K, A, T) == NfElement(K, {2, 1, -1}));
    CHECK_THROWS_WITH_AS(iota(fixtures::quartic(), rat(fixtures::quartic_L())), doctest::Contains("not in the commutant"),
                         MathError);
}

TEST_CASE("alpha generator")
{
    for (const IntMatrix& A : {fixtures::quad_A(), fixtures::quad_B()}) {
        AlphaResult r = alpha_generator(A);
        CHECK(r.alpha == 1);
        CHECK(r.index.l2 == 1);
        CHECK(r.description.tag == EndTag::QuadraticIrr);
        REQUIRE(r.description.generators.size() == 2);
        CHECK(r.description.generators[0] == RatPoly{1});
    }
    AlphaResult e = alpha_generator(fixtures::quad_11());
    CHECK(e.index.m == 3);
    CHECK(e.index.l2 == 3);
    CHECK(e.alpha == 1);

    // Rational canonical form of x^2 - x - 11: rad(11) does not divide rad(1).
    AlphaResult f = alpha_generator(IntMatrix{{0, 11}, {1, 1}});
    CHECK(f.index.l2 == 3);
    CHECK(f.alpha == f.index.l2);

    CHECK_THROWS_AS(alpha_generator(IntMatrix{{6, 0}, {0, 2}}), MathError);
}

TEST_CASE("quadratic omega")
{
    // x^2 - x - 11: sqrt(5) = (2 lambda - 1) / 3, omega = (1 + sqrt 5) / 2.
    RatPoly w = quadratic_omega(poly({-11, -1, 1}));
    CHECK(w == RatPoly{Rational(1, 3), Rational(1, 3)});
    // x^2 + 1: d = -1, omega = sqrt(-1) = lambda.
    CHECK(quadratic_omega(poly({1, 0, 1})) == RatPoly{0, 1});
}

TEST_CASE("End descriptions")
{
    CHECK(end_ring_description(IntMatrix{{2, 1}, {1, 1}}).tag == EndTag::AllInteger);
    CHECK(end_ring_description(IntMatrix::scalar(2, 2)).tag == EndTag::AllR);
    CHECK(end_ring_description(fixtures::cubic()).tag == EndTag::MonogenicIrr);
    CHECK(end_ring_description(fixtures::cubic(), true).tag == EndTag::MonogenicIrr);
    EndDescription c = end_ring_description(IntMatrix{{6, 0}, {0, 2}});
    CHECK(c.tag == EndTag::TwoDimCaseC);
    CHECK(c.lambda2 == 2);
    EndDescription b = end_ring_description(IntMatrix{{2, 1}, {0, 3}});
    CHECK(b.tag == EndTag::TwoDimCaseB);
    CHECK(b.v == 1);
    CHECK(end_ring_description(fixtures::quad_A()).tag == EndTag::QuadraticIrr);
    CHECK(end_ring_description(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).tag == EndTag::Unclassified);
    for (auto t : {EndTag::AllInteger, EndTag::AllR, EndTag::TwoDimCaseB, EndTag::TwoDimCaseC, EndTag::QuadraticIrr,
                   EndTag::MonogenicIrr, EndTag::IrrGeneral, EndTag::Unclassified})
        CHECK(end_tag_from_name(end_tag_name(t)) == t);
}

TEST_CASE("IrrGeneral without a monogenicity certificate")
{
    // Index 2 at p = 2, which also divides det.
    IntMatrix A{{0, 0, -8}, {1, 0, 2}, {0, 1, -1}};
    REQUIRE(char_poly(A) == poly({8, -2, 1, 1}));
    CHECK(end_ring_description(A).tag == EndTag::IrrGeneral);
}

TEST_CASE("automorphisms")
{
    IntMatrix A = fixtures::cubic();
    CHECK(is_automorphism(A, rat(A)).verdict == Verdict::Yes);
    CHECK(is_automorphism(A, RatMatrix::identity(3)).verdict == Verdict::Yes);
    CHECK(is_automorphism(fixtures::quad_A(), RatMatrix::scalar(2, 2)).verdict == Verdict::No);
    CHECK(is_automorphism(A, RatMatrix(3, 3)).verdict == Verdict::No);
}
