#include "doctest.h"

#include "support.hpp"

using namespace gaend;
using fixtures::poly;
using fixtures::rat;

namespace {

IntMatrix mod_matrix(IntMatrix M, const Integer& q)
{
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = nonneg_mod(M(i, j), q);
    return M;
}

}  // namespace

TEST_CASE("t multiplicity")
{
    CHECK(t_multiplicity(poly({-6, 2, -1, 1}), 2) == 2);
    CHECK(t_multiplicity(poly({5, -20, 21, -2, 1}), 5) == 2);
    CHECK(t_multiplicity(poly({7, 3, 1}), 5) == 0);
}

TEST_CASE("divisible part, trivial ranks")
{
    DivisiblePart z = divisible_part(fixtures::quad_A(), PadicContext{5, 24, 4});
    CHECK(z.t == 0);
    CHECK(z.basis.cols() == 0);

    IntMatrix A = IntMatrix::scalar(2, 2);
    DivisiblePart f = divisible_part(A, PadicContext{2, 24, 4});
    CHECK(f.t == 2);
    CHECK(f.basis == IntMatrix::identity(2));
}

TEST_CASE("divisible part of the cubic at p = 2")
{
    IntMatrix A = fixtures::cubic();
    PadicContext ctx{2, 16, 4};
    DivisiblePart D = divisible_part(A, ctx);
    REQUIRE(D.t == 2);
    REQUIRE(D.basis.cols() == 2);
    const Integer q = pow_int(2, 16), q12 = pow_int(2, 12);

    auto [h1, h2] = hensel_split(char_poly(A), 2, 16);
    IntMatrix K = mod_matrix(eval_matrix(h2, A) * D.basis, q12);
    CHECK(K.is_zero());

    CHECK(mod_matrix(D.Qinv * D.Q, q) == IntMatrix::identity(3));
    // A-invariance: in the Q-basis, A maps the first t columns into themselves.
    IntMatrix AB = mod_matrix(D.Qinv * mod_matrix(A * D.basis, q), q12);
    for (int j = 0; j < 2; ++j) CHECK(AB(2, j) == 0);

    // The basis is saturated: its reduction mod 2 has rank 2.
    RatMatrix b(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b(i, j) = Rational(nonneg_mod(D.basis(i, j), 2));
    bool full = false;
    for (int r = 0; r < 3 && !full; ++r) {
        int s = (r + 1) % 3;
        Integer d = nonneg_mod(D.basis(r, 0) * D.basis(s, 1) - D.basis(r, 1) * D.basis(s, 0), 2);
        full = d != 0;
    }
    CHECK(full);
}

TEST_CASE("local decision examples")
{
    IntMatrix A = fixtures::cubic();
    for (long p : {2, 3}) {
        PadicContext ctx = policy_context(A, rat(A), p);
        CHECK(local_end_check(A, rat(A), ctx).verdict == Verdict::Yes);
    }
    // 0 < t_p < n at both primes.
    for (long p : {2, 3}) {
        RatMatrix T = RatMatrix::scalar(3, Rational(1, p));
        LocalDecision d = local_end_check(A, T, policy_context(A, T, p));
        CHECK(d.verdict == Verdict::No);
        CHECK(d.failed == "quotient");
    }

    IntMatrix Q = fixtures::quartic();
    RatMatrix L = rat(fixtures::quartic_L());
    PadicContext ctx = policy_context(Q, L, 5);
    LocalDecision d = local_end_check(Q, L, ctx);
    CHECK(d.verdict == Verdict::Yes);
    CHECK(d.t == 2);
}

TEST_CASE("decisions are stable at four times the precision")
{
    struct Case {
        IntMatrix A;
        RatMatrix T;
        Integer p;
    };
    std::vector<Case> cases{
        {fixtures::quartic(), rat(fixtures::quartic_L()), 5},
        {fixtures::cubic(), fixtures::cubic_xi(), 2},
        {fixtures::cubic(), fixtures::cubic_xi(), 3},
        {IntMatrix{{6, 0}, {0, 2}}, RatMatrix{{0, 0}, {1, 0}}, 3},
        {IntMatrix{{6, 0}, {0, 2}}, RatMatrix{{0, 1}, {0, 0}}, 3},
    };
    for (const auto& c : cases) {
        PadicContext ctx = policy_context(c.A, c.T, c.p);
        LocalDecision base = local_end_check(c.A, c.T, ctx);
        PadicContext big = ctx;
        big.N *= 4;
        LocalDecision hi = local_end_check(c.A, c.T, big);
        CHECK(base.verdict == hi.verdict);
        CHECK(base.verdict != Verdict::Inconclusive);
    }
}

TEST_CASE("precision below the policy minimum is rejected")
{
    IntMatrix A = fixtures::cubic();
    RatMatrix T = fixtures::cubic_xi();
    unsigned need = policy_precision(A, T, 2);
    CHECK(need >= 20);
    CHECK_THROWS_AS(local_end_check(A, T, PadicContext{2, need - 1, 4}), PrecisionPolicyError);
    CHECK_NOTHROW(local_end_check(A, T, PadicContext{2, need, 4}));
    CHECK_THROWS_AS(divisible_part(A, PadicContext{2, 6, 4}), MathError);
}

TEST_CASE("characteristic sets")
{
    CharacteristicSet c = characteristic_set(IntMatrix{{6, 0}, {0, 2}}, PadicContext{3, 24, 4});
    CHECK(c.t == 1);
    CHECK(c.alpha(0, 0) == 0);
    CHECK(c.permutation == std::vector<int>{0, 1});

    // The divisible line at 3 is the eigenvector (1, 1) for the eigenvalue 3.
    CharacteristicSet b = characteristic_set(IntMatrix{{2, 1}, {0, 3}}, PadicContext{3, 24, 4});
    CHECK(b.t == 1);
    CHECK(b.permutation == std::vector<int>{0, 1});
    CHECK(b.alpha(0, 0) == 1);

    IntMatrix A = fixtures::cubic();
    PadicContext ctx{2, 24, 4};
    CharacteristicSet cs = characteristic_set(A, ctx);
    REQUIRE(cs.t == 2);
    auto [h1, h2] = hensel_split(char_poly(A), 2, 24);
    IntMatrix W = eval_matrix(h2, A);
    const Integer q = pow_int(2, 20);
    for (int i = 0; i < cs.t; ++i) {
        IntVector x(3, 0);
        x[cs.permutation[i]] = 1;
        for (int j = cs.t; j < 3; ++j) x[cs.permutation[j]] = cs.alpha(i, j - cs.t);
        IntVector y = W * x;
        for (const auto& e : y) CHECK(nonneg_mod(e, q) == 0);
    }
    CHECK_THROWS_AS(characteristic_set(fixtures::quad_A(), PadicContext{5, 24, 4}), MathError);
}
