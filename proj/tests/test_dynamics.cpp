#include "doctest.h"

#include <cmath>

#include "gaend/archimedean.hpp"
#include "support.hpp"

using namespace gaend;
using fixtures::poly;
using fixtures::rat;

namespace {

NfElement zero(const FieldPtr& K) { return NfElement::from_rational(K, 0); }

std::vector<NfElement> apply_matrix(const IntMatrix& A, const std::vector<NfElement>& v)
{
    std::vector<NfElement> out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        NfElement s = zero(v[0].field());
        for (std::size_t j = 0; j < A.cols(); ++j) s += v[j] * Rational(A(i, j));
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("eigen data of a companion matrix")
{
    EigenData ed = eigen_data(fixtures::quartic());
    NfElement l = ed.lambda;
    REQUIRE(ed.u.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(ed.u[i] == l.pow(i));
}

TEST_CASE("eigen data of the cubic")
{
    IntMatrix A = fixtures::cubic();
    EigenData ed = eigen_data(A);
    auto Au = apply_matrix(A, ed.u);
    for (std::size_t i = 0; i < 3; ++i) CHECK(Au[i] == ed.lambda * ed.u[i]);
    auto Aw = apply_matrix(A.transpose(), ed.w);
    for (std::size_t i = 0; i < 3; ++i) CHECK(Aw[i] == ed.lambda * ed.w[i]);
    NfElement dot = zero(ed.K);
    for (std::size_t i = 0; i < 3; ++i) dot += ed.w[i] * ed.u[i];
    CHECK(dot == NfElement::from_rational(ed.K, 1));

    REQUIRE(ed.S_lambda.size() == 2);
    CHECK(ed.S_lambda[0].p == 2);
    CHECK(ed.S_lambda[0].gen_poly == poly({0, 1}));
    CHECK(ed.S_lambda[1].p == 3);
    CHECK(ed.S_lambda[1].gen_poly == poly({0, 1}));
    Rational prod = 1;
    for (const auto& P : ed.S_lambda) prod *= Rational(pow_int(P.norm, valuation(ed.lambda, P)));
    CHECK(prod == 6);

    CHECK_THROWS_AS(eigen_data(IntMatrix{{6, 0}, {0, 2}}), MathError);
}

TEST_CASE("mu projection and lift")
{
    IntMatrix A = fixtures::cubic();
    EigenData ed = eigen_data(A);
    RatVector x{3, -1, 4};
    CHECK(mu_project(ed, rat(A) * x) == ed.lambda * mu_project(ed, x));
    NfElement y(ed.K, {Rational(1, 2), 5, -2});
    CHECK(mu_project(ed, mu_lift(ed, y)) == y);

    RatVector one = mu_lift(ed, NfElement::from_rational(ed.K, 1));
    for (const auto& c : one) CHECK(c.get_den() == 1);

    RatVector inv = mu_lift(ed, ed.lambda.inverse());
    for (const auto& c : inv) {
        for (const auto& p : prime_divisors(c.get_den())) CHECK((p == 2 || p == 3));
    }
    auto k = bounded_membership(A, inv, 4);
    REQUIRE(k.has_value());
    CHECK(*k <= 4);
}

TEST_CASE("Y module")
{
    YModuleDescription y = y_module(eigen_data(fixtures::cubic()));
    CHECK(y.generators.size() == 3);
    CHECK(y.lambda_stable);
}

TEST_CASE("density")
{
    CHECK(is_dense(fixtures::quad_A()));
    CHECK_FALSE(is_dense(IntMatrix{{1, 0}, {0, 6}}));
    CHECK_FALSE(is_dense(IntMatrix{{2, 1}, {1, 1}}));
    CHECK(is_dense(IntMatrix{{6, 0}, {0, 2}}));
}

TEST_CASE("ergodicity")
{
    IntMatrix A = fixtures::cubic();
    CHECK(is_ergodic(A, RatMatrix::identity(3)).verdict == Verdict::No);
    CHECK(is_ergodic(A, RatMatrix::scalar(3, -1)).verdict == Verdict::No);
    CHECK(is_ergodic(A, RatMatrix(3, 3)).verdict == Verdict::No);
    CHECK(is_ergodic(A, fixtures::cubic_xi()).verdict == Verdict::Yes);
    CHECK(is_ergodic(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, RatMatrix::identity(3) * Rational(2)).verdict ==
          Verdict::Inconclusive);
}

TEST_CASE("periodic points of the cubic example")
{
    IntMatrix A = fixtures::cubic();
    RatMatrix T = fixtures::cubic_xi();
    CHECK(periodic_points(A, T, 1) == 169);
    CHECK(periodic_points(A, T, 2) == 38701);
    CHECK(Integer(38701) == Integer(169) * 229);

    EigenData ed = eigen_data(A);
    NfElement xi = iota(ed.K, A, T);
    CHECK(periodic_points_by_ideals(ed, xi, 1) == 169);
    CHECK(periodic_points_by_ideals(ed, xi, 2) == 38701);
}

TEST_CASE("periodic points for xi = lambda")
{
    IntMatrix A = fixtures::cubic();
    EigenData ed = eigen_data(A);
    // lambda - 1 is a unit at every prime dividing lambda, so the count is |det(A - I)|.
    Integer d = abs(determinant(A - IntMatrix::identity(3)));
    CHECK(d == 4);
    CHECK(periodic_points(ed, ed.lambda, 1) == d);
    CHECK(periodic_points_by_ideals(ed, ed.lambda, 1) == d);
    CHECK_THROWS_AS(periodic_points(ed, NfElement::from_rational(ed.K, 1), 1), MathError);
}

TEST_CASE("entropy")
{
    // x^2 - x + 13, xi = 1 + lambda: |1 + lambda|^2 = h(-1) = 15 and xi is a unit above 13.
    IntMatrix A = fixtures::quad_A();
    EigenData ed = eigen_data(A);
    NfElement xi = NfElement::from_rational(ed.K, 1) + ed.lambda;
    EntropyResult r = entropy(ed, xi, 128, 4);
    CHECK(r.finite_part == 0.0);
    CHECK(r.h == doctest::Approx(std::log(15.0)).epsilon(1e-12));

    EigenData c = eigen_data(fixtures::cubic());
    EntropyResult l = entropy(c, c.lambda, 128, 2);
    CHECK(l.finite_part == 0.0);
    CHECK(l.h == doctest::Approx(l.archimedean_part));
    CHECK(l.h >= std::log(6.0) - 1e-12);

    EntropyResult x = entropy(fixtures::cubic(), fixtures::cubic_xi(), 128, 8);
    CHECK(x.finite_part > 0.0);
    CHECK(x.counts[0] == 169);
    CHECK(std::abs(x.growth[7] - x.h) <= 0.05 * std::max(x.h, 1.0));
}
