#include "doctest.h"

#include <algorithm>

#include "gaend/hnf.hpp"
#include "gaend/report.hpp"
#include "support.hpp"

using namespace gaend;
using fixtures::Gen;
using fixtures::poly;
using fixtures::rat;

namespace {

IntPoly expand(const Factorization& fs)
{
    IntPoly r = poly({1});
    for (const auto& [f, e] : fs) r = r * pow(f, e);
    return r;
}

std::vector<Integer> support_primes(const NfElement& x)
{
    Rational n = abs(x.norm());
    std::vector<Integer> ps = prime_divisors(n.get_num());
    for (const auto& p : prime_divisors(n.get_den())) ps.push_back(p);
    for (const auto& p : prime_divisors(x.denominator())) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

// Sum over i of c_i A^i for i in [-2, 2].
RatMatrix laurent(const IntMatrix& A, Gen& g)
{
    RatMatrix Ar = rat(A), Ai = inverse(Ar);
    RatMatrix T(A.rows(), A.cols());
    RatMatrix up = RatMatrix::identity(A.rows()), dn = Ai;
    for (int i = 0; i <= 2; ++i) {
        T += up * Rational(g.range(-3, 3));
        up = up * Ar;
    }
    for (int i = 1; i <= 2; ++i) {
        T += dn * Rational(g.range(-3, 3));
        dn = dn * Ai;
    }
    return T;
}

}  // namespace

TEST_CASE("hnf is idempotent and unimodular")
{
    Gen g(1);
    for (int it = 0; it < 150; ++it) {
        std::size_t n = static_cast<std::size_t>(g.range(2, 5));
        IntMatrix M = g.nonsingular(n, 12);
        HnfResult r = hnf(M, true);
        CHECK(M * r.U == r.H);
        CHECK(abs(determinant(r.U)) == 1);
        CHECK(hnf(r.H, true).H == r.H);
        CHECK(abs(determinant(r.H)) == abs(determinant(M)));
    }
}

TEST_CASE("Cayley-Hamilton")
{
    Gen g(2);
    for (int it = 0; it < 150; ++it) {
        std::size_t n = static_cast<std::size_t>(g.range(2, 5));
        IntMatrix A = g.int_matrix(n, 9);
        CHECK(eval_matrix(char_poly(A), A).is_zero());
    }
}

TEST_CASE("factorizations multiply back")
{
    Gen g(3);
    for (int it = 0; it < 80; ++it) {
        IntPoly f = g.int_poly(g.range(1, 3), 6, g.coin());
        IntPoly h = g.int_poly(g.range(1, 3), 6, true);
        if (g.coin()) h = h * h;
        IntPoly p = f * h;
        if (p.degree() > kMaxFactorDegree) continue;
        CHECK(expand(factor_over_z(p)) == p);
    }
}

TEST_CASE("factor_mod_p degrees add up")
{
    Gen g(4);
    for (int it = 0; it < 120; ++it) {
        IntPoly f = g.int_poly(g.range(1, 8), 20, true);
        Integer p = g.pick(std::vector<Integer>{2, 3, 5, 7, 11, 13});
        long total = 0;
        for (const auto& [h, e] : factor_mod_p(f, p)) total += std::max(0L, h.degree()) * e;
        CHECK(total == reduce_mod(f, p).degree());
    }
}

TEST_CASE("hensel split identities")
{
    Gen g(5);
    for (int it = 0; it < 120; ++it) {
        Integer p = g.pick(std::vector<Integer>{2, 3, 5, 7});
        IntPoly h = g.int_poly(g.range(2, 6), 9, true);
        unsigned N = static_cast<unsigned>(g.range(1, 64));
        int t = t_multiplicity(h, p);
        auto [h1, h2] = hensel_split(h, p, N);
        Integer q = pow_int(p, N);
        CHECK(mul_mod(h1, h2, q) == reduce_mod(h, q));
        CHECK(h2.degree() == t);
        CHECK(reduce_mod(h2, p) == reduce_mod(IntPoly::monomial(Integer(1), t), p));
        // t_p >= 1 exactly when p | h(0).
        CHECK((t >= 1) == (h.coeff(0) % p == 0));
    }
}

TEST_CASE("prime splitting, product formula and valuation additivity")
{
    Gen g(6);
    for (const IntPoly& h : fixtures::monogenic_fields()) {
        auto K = NumberField::create(h);
        for (long p : {2, 3, 5, 7, 11, 13, 17}) {
            int sum = 0;
            for (const auto& P : split_prime(*K, p)) sum += P.e * P.f;
            CHECK(sum == K->degree());
        }
        for (int it = 0; it < 50; ++it) {
            NfElement x = g.element(K, 9, 4);
            Rational prod = 1;
            for (const auto& p : support_primes(x))
                for (const auto& P : split_prime(*K, p)) {
                    int v = valuation(x, P);
                    Rational f(pow_int(P.norm, static_cast<unsigned long>(std::abs(v))));
                    prod = v >= 0 ? Rational(prod * f) : Rational(prod / f);
                }
            CHECK(prod == abs(x.norm()));
        }
        for (int it = 0; it < 10; ++it) {
            NfElement x = g.element(K, 6, 3), y = g.element(K, 6, 3);
            for (const auto& p : support_primes(x * y))
                for (const auto& P : split_prime(*K, p)) CHECK(valuation(x * y, P) == valuation(x, P) + valuation(y, P));
        }
    }
}

TEST_CASE("ideal containment matches valuations")
{
    Gen g(7);
    for (const IntPoly& h : {poly({-6, 2, -1, 1}), poly({13, -1, 1}), poly({-2, 0, 0, 1})}) {
        auto K = NumberField::create(h);
        for (int it = 0; it < 15; ++it) {
            NfElement a = g.element(K, 6, 1);
            NfElement x = g.element(K, 8, 2);
            FracIdeal I = FracIdeal::principal(a);
            bool by_val = true;
            std::vector<Integer> ps = support_primes(a);
            for (const auto& p : support_primes(x)) ps.push_back(p);
            for (const auto& p : ps)
                for (const auto& P : split_prime(*K, p)) by_val &= valuation(x, P) >= valuation(I, P);
            CHECK(I.contains(x) == by_val);
            CHECK(I.contains(a));
        }
    }
}

TEST_CASE("divisible part rank and invariance")
{
    Gen g(8);
    int checked = 0;
    while (checked < 40) {
        std::size_t n = static_cast<std::size_t>(g.range(2, 4));
        IntMatrix A = g.nonsingular(n, 5);
        GaInvariants inv = invariants(A);
        for (const auto& p : inv.P_prime) {
            PadicContext ctx{p, 30, 4};
            DivisiblePart D = divisible_part(A, ctx);
            CHECK(D.t == inv.t.at(p));
            CHECK(static_cast<int>(D.basis.cols()) == D.t);
            Integer q = pow_int(p, 26), qN = pow_int(p, 30);
            IntMatrix X = D.Qinv * (A * D.basis);
            for (std::size_t i = D.t; i < n; ++i)
                for (int j = 0; j < D.t; ++j) CHECK(nonneg_mod(X(i, j), q) == 0);
            IntMatrix I = D.Qinv * D.Q;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(nonneg_mod(I(i, j) - (i == j ? 1 : 0), qN) == 0);
            ++checked;
        }
    }
}

TEST_CASE("closed forms agree with the p-adic decision")
{
    Gen g(16);
    int members = 0;
    for (const IntMatrix& A : {IntMatrix{{2, 1}, {0, 3}}, IntMatrix{{6, 0}, {0, 2}}, IntMatrix{{4, 0}, {1, 9}},
                               IntMatrix{{12, 0}, {5, 2}}, IntMatrix{{5, 3}, {0, 2}}}) {
        Case2d tag = classify2d(A).tag;
        REQUIRE((tag == Case2d::CaseB || tag == Case2d::CaseC));
        for (int it = 0; it < 60; ++it) {
            RatMatrix T = fixtures::sample_2d(A, g, it % 3);
            bool cf = closed_form_membership(A, T);
            members += cf;
            CHECK(padic_membership(A, T).verdict == (cf ? Verdict::Yes : Verdict::No));
            if (it % 3 == 1) CHECK(cf);
        }
    }
    CHECK(members >= 100);
}

TEST_CASE("oracle agreement on random pairs")
{
    Gen g(9);
    int compared = 0;
    for (int it = 0; it < 150; ++it) {
        std::size_t n = static_cast<std::size_t>(g.range(2, 3));
        IntMatrix A = g.nonsingular(n, 5);
        RatMatrix T = laurent(A, g);
        if (g.coin()) T(0, static_cast<std::size_t>(g.range(0, static_cast<long>(n) - 1))) += Rational(1, g.pick(std::vector<long>{1, 2, 3, 5}));
        Decision o = bounded_oracle(A, T, 6, 12);
        Decision e = is_endomorphism(A, T);
        if (o.verdict == Verdict::No) {
            CHECK(e.verdict == Verdict::No);
            ++compared;
        } else if (o.cert.oracle == "positive") {
            CHECK(e.verdict == Verdict::Yes);
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("YES certificates commute and iota is a ring map")
{
    Gen g(10);
    for (const IntMatrix& A : {fixtures::cubic(), fixtures::quad_A(), fixtures::quad_11()}) {
        auto K = NumberField::create(char_poly(A));
        for (int it = 0; it < 10; ++it) {
            RatMatrix S = laurent(A, g), T = laurent(A, g);
            REQUIRE(is_endomorphism(A, S).verdict == Verdict::Yes);
            CHECK(S * rat(A) == rat(A) * S);
            CHECK(iota(K, A, S * T) == iota(K, A, S) * iota(K, A, T));
            CHECK(iota(K, A, S + T) == iota(K, A, S) + iota(K, A, T));
        }
        CHECK(iota(K, A, RatMatrix::identity(A.rows())) == NfElement::from_rational(K, 1));
    }
}

TEST_CASE("the commutant basis of a MonogenicIrr fixture has full rank")
{
    IntMatrix A = fixtures::cubic();
    REQUIRE(end_ring_description(A).tag == EndTag::MonogenicIrr);
    RatMatrix span(3, 9);
    RatMatrix P = RatMatrix::identity(3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(is_endomorphism(A, P).verdict == Verdict::Yes);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) span(i, 3 * r + c) = P(r, c);
        P = P * rat(A);
    }
    CHECK(rank(span) == 3);
}

TEST_CASE("mu round trip and equivariance")
{
    Gen g(11);
    for (const IntMatrix& A : {fixtures::cubic(), fixtures::quartic(), fixtures::quad_B()}) {
        EigenData ed = eigen_data(A);
        for (int it = 0; it < 100; ++it) {
            NfElement x = g.element(ed.K, 20, 6);
            CHECK(mu_project(ed, mu_lift(ed, x)) == x);
        }
        for (int it = 0; it < 20; ++it) {
            RatVector v;
            for (std::size_t i = 0; i < A.rows(); ++i) v.emplace_back(g.range(-9, 9));
            CHECK(mu_project(ed, rat(A) * v) == ed.lambda * mu_project(ed, v));
        }
    }
}

TEST_CASE("periodic point counts agree along both routes")
{
    Gen g(12);
    IntMatrix A = fixtures::cubic();
    EigenData ed = eigen_data(A);
    for (int it = 0; it < 12; ++it) {
        RatMatrix T = laurent(A, g);
        NfElement xi = iota(ed.K, A, T);
        if (xi.is_zero() || is_root_of_unity(xi)) continue;
        for (unsigned k = 1; k <= 3; ++k) {
            Integer a = periodic_points(ed, xi, k);
            CHECK(a > 0);
            CHECK(a == periodic_points_by_ideals(ed, xi, k));
        }
    }
    for (unsigned j = 1; j <= 3; ++j)
        for (unsigned k = 1; k <= 2; ++k)
            CHECK(periodic_points(A, power(rat(A), static_cast<long>(j)), k) == periodic_points(A, rat(A), j * k));
}

TEST_CASE("unimodular matrices are never dense")
{
    Gen g(13);
    int seen = 0;
    while (seen < 30) {
        IntMatrix A = g.int_matrix(static_cast<std::size_t>(g.range(2, 3)), 3);
        if (abs(determinant(A)) != 1) continue;
        CHECK_FALSE(is_dense(A));
        ++seen;
    }
}

TEST_CASE("odometer membership has witnesses and units map to matrices")
{
    Gen g(14);
    for (const IntMatrix& A : {fixtures::cubic(), fixtures::quartic(), IntMatrix{{2, 1}, {0, 3}}, IntMatrix{{6, 0}, {0, 2}}}) {
        for (int it = 0; it < 20; ++it) {
            IntMatrix T = g.int_matrix(A.rows(), 2);
            if (abs(determinant(T)) != 1) continue;
            if (in_linear_rep_group(A, T).verdict == Verdict::Yes) {
                CHECK(fixtures::linrep_witnesses(A.transpose(), rat(T.transpose()), 6, 12));
            }
        }
    }
    CHECK(fixtures::linrep_witnesses(fixtures::quartic().transpose(), rat(fixtures::quartic_L().transpose()), 6, 12));

    IntMatrix C{{0, 3}, {1, 0}};
    auto K = NumberField::create(char_poly(C));
    for (const IntVector& u : {IntVector{2, 1}, IntVector{7, 4}, IntVector{2, -1}, IntVector{-1, 0}}) {
        IntMatrix T = unit_to_matrix(C, u);
        NfElement xi(K, {Rational(u[0]), Rational(u[1])});
        CHECK(Rational(determinant(T)) == xi.norm());
        NfElement back = iota(K, C, rat(T));
        CHECK(back == xi);
        CHECK(unit_to_matrix(C, {back.coords()[0].get_num(), back.coords()[1].get_num()}) == T);
        CHECK(T * C == C * T);
    }
}

TEST_CASE("reports round trip for random decisions")
{
    Gen g(15);
    for (int it = 0; it < 20; ++it) {
        IntMatrix A = g.nonsingular(2, 6);
        RatMatrix T = laurent(A, g);
        AnalysisReport r;
        r.command = "end-check";
        r.A = A;
        r.T = T;
        r.invariants = invariants_block(invariants(A));
        r.end_description = end_ring_description(A);
        r.linrep = linear_rep_group_description(A);
        r.decisions.push_back({"endomorphism", is_endomorphism(A, T)});
        r.decisions.push_back({"oracle", bounded_oracle(A, T, 3, 6)});
        CHECK(report_from_json(parse_json_exact(to_json(r).dump())) == r);
    }
}
