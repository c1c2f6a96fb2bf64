#include "gaend/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "gaend/archimedean.hpp"
#include "gaend/factor.hpp"

namespace gaend {

namespace {

using KMatrix = std::vector<std::vector<NfElement>>;

// One-dimensional kernel of M over K, first coordinate scaled to 1.
std::vector<NfElement> kernel_line(KMatrix M, const FieldPtr& K)
{
    const std::size_t n = M.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && M[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(M[piv], M[r]);
        NfElement inv = M[r][c].inverse();
        for (std::size_t j = c; j < n; ++j) M[r][j] = M[r][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            NfElement f = M[i][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = true;
        ++r;
    }
    if (r + 1 != n) throw MathError("eigenspace over K is not one-dimensional");
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::vector<NfElement> v(n, NfElement::from_rational(K, 0));
    v[free] = NfElement::from_rational(K, 1);
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -M[i][free];
    NfElement s = v[0].inverse();
    for (auto& x : v) x = x * s;
    return v;
}

KMatrix shifted(const IntMatrix& A, const NfElement& lam)
{
    const FieldPtr& K = lam.field();
    const std::size_t n = A.rows();
    KMatrix M(n, std::vector<NfElement>(n, NfElement::from_rational(K, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            M[i][j] = NfElement::from_rational(K, Rational(A(i, j)));
            if (i == j) M[i][j] -= lam;
        }
    return M;
}

double log_of(const Integer& z)
{
    long e;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

void check_pr_end(const GaInvariants& inv)
{
    if (!inv.irreducible) throw MathError("characteristic polynomial is reducible");
    if (inv.P_prime.empty()) throw MathError("P' is empty");
    if (!has_coprime_t(inv)) throw MathError("no p in P' with gcd(n, t_p) = 1");
}

}  // namespace

EigenData eigen_data(const IntMatrix& A, bool assert_monogenic)
{
    GaInvariants inv = invariants(A);
    if (!inv.irreducible) throw MathError("eigen_data requires an irreducible characteristic polynomial");
    EigenData ed;
    ed.A = A;
    ed.K = NumberField::create(inv.h, assert_monogenic);
    ed.lambda = NfElement::lambda(ed.K);
    ed.u = kernel_line(shifted(A, ed.lambda), ed.K);

    // Clear rational denominators, then remove the integer content.
    Integer d = 1;
    for (const auto& x : ed.u) d = lcm(d, x.denominator());
    Integer g = 0;
    for (auto& x : ed.u) {
        x = x * Rational(d);
        for (const auto& c : x.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (g > 1)
        for (auto& x : ed.u) x = x * Rational(1, g);

    ed.w = kernel_line(shifted(A.transpose(), ed.lambda), ed.K);
    NfElement dot = NfElement::from_rational(ed.K, 0);
    for (std::size_t i = 0; i < ed.u.size(); ++i) dot += ed.w[i] * ed.u[i];
    NfElement s = dot.inverse();
    for (auto& x : ed.w) x = x * s;

    for (const auto& p : inv.P)
        for (auto& P : split_prime(*ed.K, p))
            if (valuation(ed.lambda, P) > 0) ed.S_lambda.push_back(P);
    return ed;
}

NfElement mu_project(const EigenData& ed, const RatVector& x)
{
    if (x.size() != ed.w.size()) throw MathError("mu_project: dimension mismatch");
    NfElement r = NfElement::from_rational(ed.K, 0);
    for (std::size_t i = 0; i < x.size(); ++i) r += ed.w[i] * x[i];
    return r;
}

RatVector mu_lift(const EigenData& ed, const NfElement& x1)
{
    RatVector out;
    for (const auto& uj : ed.u) out.push_back((x1 * uj).trace());
    return out;
}

std::optional<int> bounded_membership(const IntMatrix& A, const RatVector& x, int max_k)
{
    RatMatrix Ar = to_rational(A);
    RatVector cur = x;
    for (int k = 0; k <= max_k; ++k) {
        if (std::all_of(cur.begin(), cur.end(), [](const Rational& q) { return q.get_den() == 1; })) return k;
        cur = Ar * cur;
    }
    return std::nullopt;
}

YModuleDescription y_module(const EigenData& ed)
{
    YModuleDescription y;
    y.generators = ed.u;
    y.statement = "Y = {m_1 lambda^k_1 u_1 + ... + m_n lambda^k_n u_n}";
    y.lower_bound = "Span_Z(u_1, ..., u_n)";
    y.upper_bound = "Span_R(u_1, ..., u_n)";
    const std::size_t n = ed.u.size();
    // Coordinates in the u-basis: columns are the power-basis vectors of u_j.
    RatMatrix U(n, n);
    for (std::size_t j = 0; j < n; ++j) U.set_column(j, ed.u[j].coords());
    GaInvariants inv = invariants(ed.A);
    NfElement li = ed.lambda.inverse();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
        RatVector up = solve(U, (ed.lambda * ed.u[i]).coords());
        RatVector dn = solve(U, (li * ed.u[i]).coords());
        for (std::size_t j = 0; j < n; ++j) {
            if (up[j].get_den() != 1 || !in_R(dn[j], inv)) ok = false;
        }
    }
    y.lambda_stable = ok;
    return y;
}

bool is_dense(const IntMatrix& A)
{
    IntPoly h = char_poly(A);
    for (auto& [f, e] : factor_over_z(h)) {
        if (f.degree() < 1) continue;
        const Integer& c = f.coeffs()[0];
        if (c == 1 || c == -1) return false;
    }
    return true;
}

Decision is_ergodic(const IntMatrix& A, const RatMatrix& T)
{
    Decision d;
    d.cert.kind = "ergodicity";
    if (T.is_zero()) {
        d.verdict = Verdict::No;
        d.cert.failing_condition = "T = 0";
        return d;
    }
    GaInvariants inv = invariants(A);
    try {
        check_pr_end(inv);
    } catch (const MathError& e) {
        d.verdict = Verdict::Inconclusive;
        d.cert.note = std::string("hypotheses not met: ") + e.what();
        return d;
    }
    FieldPtr K = NumberField::create(inv.h);
    NfElement xi;
    try {
        xi = iota(K, A, T);
    } catch (const MathError& e) {
        d.verdict = Verdict::No;
        d.cert.failing_condition = "T is not an endomorphism (not in the commutant)";
        return d;
    }
    if (is_root_of_unity(xi)) {
        d.verdict = Verdict::No;
        d.cert.failing_condition = "xi = iota(T) is a root of unity";
        d.cert.note = "xi = " + xi.to_string();
        return d;
    }
    d.verdict = Verdict::Yes;
    d.cert.note = "xi = " + xi.to_string() + " is not a root of unity";
    return d;
}

Integer periodic_points(const EigenData& ed, const NfElement& xi, unsigned k)
{
    if (k == 0) throw MathError("period must be positive");
    NfElement y = xi.pow(k) - NfElement::from_rational(ed.K, 1);
    if (y.is_zero()) throw MathError("xi^k = 1: infinitely many periodic points");
    Rational r = abs(y.norm());
    for (const auto& P : ed.S_lambda) {
        int v = valuation(y, P);
        Rational f(pow_int(P.norm, static_cast<unsigned long>(std::abs(v))));
        if (v > 0) r /= f;
        else r *= f;
    }
    if (r.get_den() != 1) throw MathError("periodic point count is not integral: " + to_string(r));
    return r.get_num();
}

Integer periodic_points(const IntMatrix& A, const RatMatrix& T, unsigned k, bool assert_monogenic)
{
    GaInvariants inv = invariants(A);
    check_pr_end(inv);
    EigenData ed = eigen_data(A, assert_monogenic);
    return periodic_points(ed, iota(ed.K, A, T), k);
}

Integer periodic_points_by_ideals(const EigenData& ed, const NfElement& xi, unsigned k)
{
    NfElement y = xi.pow(k) - NfElement::from_rational(ed.K, 1);
    if (y.is_zero()) throw MathError("xi^k = 1: infinitely many periodic points");
    Integer d = y.denominator();
    Rational na = abs((y * Rational(d)).norm());
    std::vector<Integer> primes = prime_divisors(na.get_num());
    for (const auto& p : prime_divisors(d)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    Rational r = 1;
    for (const auto& p : primes)
        for (auto& P : split_prime(*ed.K, p)) {
            bool in_s = std::any_of(ed.S_lambda.begin(), ed.S_lambda.end(),
                                    [&](const PrimeIdealData& Q) { return Q.p == P.p && Q.gen_poly == P.gen_poly; });
            if (in_s) continue;
            int v = valuation(y, P);
            Rational f(pow_int(P.norm, static_cast<unsigned long>(std::abs(v))));
            if (v > 0) r *= f;
            else r /= f;
        }
    if (r.get_den() != 1) throw MathError("periodic point count is not integral: " + to_string(r));
    return r.get_num();
}

EntropyResult entropy(const EigenData& ed, const NfElement& xi, long precision_bits, int k_max)
{
    EntropyResult res;
    res.precision_bits = precision_bits;
    const mpfr_prec_t wp = precision_bits + 32;
    Real fin = Real::from(0.0, wp);
    for (const auto& P : ed.S_lambda) {
        int v = valuation(xi, P);
        if (v < 0) fin = fin + Real::from(Integer(-v), wp) * Real::from(P.norm, wp).log();
    }
    Real arch = Real::from(0.0, wp);
    for (const auto& pv : archimedean_abs(xi, precision_bits)) {
        Real l = pv.value.log();
        if (l.sign() > 0) arch = arch + l;
    }
    Real h = fin + arch;
    res.h = h.to_double();
    res.h_decimal = h.to_string(30);
    res.finite_part = fin.to_double();
    res.archimedean_part = arch.to_double();
    for (int k = 1; k <= k_max; ++k) {
        Integer c = periodic_points(ed, xi, k);
        res.counts.push_back(c);
        res.growth.push_back(log_of(c) / k);
    }
    return res;
}

EntropyResult entropy(const IntMatrix& A, const RatMatrix& T, long precision_bits, int k_max, bool assert_monogenic)
{
    GaInvariants inv = invariants(A);
    check_pr_end(inv);
    EigenData ed = eigen_data(A, assert_monogenic);
    return entropy(ed, iota(ed.K, A, T), precision_bits, k_max);
}

}  // namespace gaend
