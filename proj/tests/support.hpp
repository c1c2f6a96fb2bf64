#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaend/dynamics.hpp"
#include "gaend/endo.hpp"
#include "gaend/odometer.hpp"

namespace fixtures {

using namespace gaend;

// Companion of x^3 - x^2 + 2x - 6.
inline IntMatrix cubic() { return IntMatrix{{0, 0, 6}, {1, 0, -2}, {0, 1, 1}}; }

// (2I + A - A^2) A^-3 for the cubic.
inline RatMatrix cubic_xi()
{
    RatMatrix A = to_rational(cubic());
    RatMatrix q = RatMatrix::identity(3) * Rational(2) + A - A * A;
    return q * power(A, -3);
}

inline IntMatrix quartic()
{
    return IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-5, 20, -21, 2}};
}

inline IntMatrix quartic_L()
{
    return IntMatrix{{1, 0, 0, 0}, {40, -81, 6, -4}, {20, -80, 5, -4}, {-770, 1520, -114, 75}};
}

inline IntMatrix quad_A() { return IntMatrix{{0, 1}, {-13, 1}}; }
inline IntMatrix quad_B() { return IntMatrix{{-1, 3}, {-5, 2}}; }
inline IntMatrix quad_11() { return IntMatrix{{-1, 3}, {3, 2}}; }

inline IntPoly poly(std::initializer_list<long> c)
{
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(v);
}

inline RatMatrix rat(const IntMatrix& m) { return to_rational(m); }

// Deterministic generators.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))]; }

    IntMatrix int_matrix(std::size_t n, long bound)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = range(-bound, bound);
        return m;
    }

    IntMatrix nonsingular(std::size_t n, long bound)
    {
        for (;;) {
            IntMatrix m = int_matrix(n, bound);
            if (determinant(m) != 0) return m;
        }
    }

    IntPoly int_poly(long degree, long bound, bool monic)
    {
        std::vector<Integer> c;
        for (long i = 0; i < degree; ++i) c.emplace_back(range(-bound, bound));
        Integer lead = monic ? Integer(1) : Integer(range(1, bound));
        c.push_back(lead);
        return IntPoly(c);
    }

    NfElement element(const FieldPtr& K, long bound, long den_bound)
    {
        for (;;) {
            RatVector c;
            for (int i = 0; i < K->degree(); ++i) c.emplace_back(range(-bound, bound), range(1, den_bound));
            for (auto& q : c) q.canonicalize();
            NfElement x(K, c);
            if (!x.is_zero()) return x;
        }
    }

private:
    std::mt19937_64 rng_;
};

// Fields used by the invariant suites; all have O_K = Z[lambda].
inline std::vector<IntPoly> monogenic_fields()
{
    return {poly({13, -1, 1}),  poly({-3, 0, 1}),      poly({1, 0, 1}),          poly({-1, -1, 1}),
            poly({5, 0, 1}),    poly({-6, 2, -1, 1}),  poly({-2, 0, 0, 1}),      poly({1, 1, 0, 1}),
            poly({-1, -3, 0, 1}), poly({1, 0, 0, 0, 1}), poly({-1, -1, 0, 0, 0, 1}), poly({5, -20, 21, -2, 1})};
}

inline Integer denominator_on(Gen& g, const std::vector<Integer>& primes, long max_exp = 3)
{
    Integer d = 1;
    for (const auto& p : primes) d *= pow_int(p, static_cast<unsigned long>(g.range(0, max_exp)));
    return d;
}

inline Rational ratio(long num, const Integer& den)
{
    Rational q{Integer(num), den};
    q.canonicalize();
    return q;
}

// Random T for a reducible 2x2 fixture in case (b) or (c). Mode 0 draws
// entries with denominators on P; mode 1 builds a member from the normal
// form S A S^-1 = M diag(l1, l2) M^-1; mode 2 perturbs such a member.
inline RatMatrix sample_2d(const IntMatrix& A, Gen& g, int mode)
{
    GaInvariants inv = invariants(A);
    RatMatrix T(2, 2);
    if (mode == 0) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) T(i, j) = ratio(g.range(-20, 20), denominator_on(g, inv.P));
        return T;
    }
    Classification2d c = classify2d(A);
    RatMatrix S = to_rational(c.S), Si = inverse(S);
    auto primes_of = [](const Integer& l) { return prime_divisors(abs(l)); };
    RatMatrix core(2, 2);
    if (c.tag == Case2d::CaseB) {
        RatMatrix M{{Rational(1), Rational(c.u)}, {Rational(0), Rational(c.v)}};
        Rational x1 = ratio(g.range(-20, 20), denominator_on(g, primes_of(c.lambda1)));
        Rational x2 = x1 + Rational(c.v) * ratio(g.range(-20, 20), denominator_on(g, primes_of(c.lambda2)));
        // x2 must itself lie in Z[1/l2]: keep x1 integral in that case.
        if (!denominator_supported_on(x2, primes_of(c.lambda2))) {
            x1 = Rational(g.range(-20, 20));
            x2 = x1 + Rational(c.v) * ratio(g.range(-20, 20), denominator_on(g, primes_of(c.lambda2)));
        }
        core = M * RatMatrix{{x1, Rational(0)}, {Rational(0), x2}} * inverse(M);
    } else {
        core(0, 0) = ratio(g.range(-20, 20), denominator_on(g, inv.P));
        core(0, 1) = ratio(g.range(-20, 20), denominator_on(g, inv.P));
        core(1, 1) = ratio(g.range(-20, 20), denominator_on(g, primes_of(c.lambda2)));
    }
    T = Si * core * S;
    if (mode == 2) {
        std::size_t i = static_cast<std::size_t>(g.range(0, 1)), j = static_cast<std::size_t>(g.range(0, 1));
        T(i, j) += ratio(1, g.pick(inv.P));
    }
    return T;
}

// Bounded search for k with A^k T A^-m integral, m = 0..depth_m.
inline bool linrep_witnesses(const IntMatrix& A, const RatMatrix& T, int depth_m, int depth_k)
{
    RatMatrix Ar = to_rational(A);
    RatMatrix Ainv = inverse(Ar);
    RatMatrix right = RatMatrix::identity(A.rows());
    for (int m = 0; m <= depth_m; ++m) {
        RatMatrix X = T * right;
        bool found = false;
        for (int k = 0; k <= depth_k && !found; ++k) {
            if (is_integral(X)) found = true;
            X = Ar * X;
        }
        if (!found) return false;
        right = right * Ainv;
    }
    return true;
}

}  // namespace fixtures
