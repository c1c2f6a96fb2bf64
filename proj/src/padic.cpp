#include "gaend/padic.hpp"

#include <algorithm>
#include <numeric>

#include "gaend/poly.hpp"

namespace gaend {

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    default: return "INCONCLUSIVE";
    }
}

namespace {

constexpr unsigned kPrecisionFloor = 20;

// Valuation of a residue mod p^N; zero reports N.
int vmod(const Integer& a, const Integer& p, unsigned N)
{
    if (a == 0) return static_cast<int>(N);
    return std::min(valuation(a, p), static_cast<int>(N));
}

IntMatrix reduce(IntMatrix M, const Integer& q)
{
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = nonneg_mod(M(i, j), q);
    return M;
}

int max_den_exponent(const RatMatrix& T, const Integer& p)
{
    int e = 0;
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j) {
            const Integer& d = T(i, j).get_den();
            if (d != 1 && mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) e = std::max(e, valuation(d, p));
        }
    return e;
}

bool p_integral(const RatMatrix& T, const Integer& p) { return max_den_exponent(T, p) == 0; }

LocalDecision decide_once(const IntMatrix& A, const RatMatrix& T, const PadicContext& ctx)
{
    LocalDecision d;
    d.p = ctx.p;
    d.N = ctx.N;
    DivisiblePart D = divisible_part(A, ctx);
    d.t = D.t;
    const int n = static_cast<int>(A.rows());
    if (D.t == 0) {
        d.verdict = p_integral(T, ctx.p) ? Verdict::Yes : Verdict::No;
        if (d.verdict == Verdict::No) d.failed = "denominator";
        return d;
    }
    if (D.t == n) {
        d.verdict = Verdict::Yes;
        return d;
    }
    const Integer q = ctx.modulus();
    const int e = max_den_exponent(T, ctx.p);
    const Rational scale(pow_int(ctx.p, e));
    IntMatrix T0(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T0(i, j) = rational_mod(T(i, j) * scale, q);
    IntMatrix Tp = reduce(D.Qinv * reduce(T0 * D.Q, q), q);

    const int inv_bound = static_cast<int>(ctx.N) - D.v_s - static_cast<int>(ctx.slack);
    for (int i = D.t; i < n; ++i)
        for (int j = 0; j < D.t; ++j)
            if (vmod(Tp(i, j), ctx.p, ctx.N) < inv_bound) {
                d.verdict = Verdict::No;
                d.failed = "invariance";
                return d;
            }
    for (int i = D.t; i < n; ++i)
        for (int j = D.t; j < n; ++j)
            if (vmod(Tp(i, j), ctx.p, ctx.N) < e) {
                d.verdict = Verdict::No;
                d.failed = "quotient";
                return d;
            }
    d.verdict = Verdict::Yes;
    return d;
}

}  // namespace

DivisiblePart divisible_part(const IntMatrix& A, const PadicContext& ctx)
{
    if (!A.square()) throw MathError("divisible_part: matrix must be square");
    if (ctx.N < ctx.slack + 4) throw MathError("p-adic precision must exceed slack + 4");
    const int n = static_cast<int>(A.rows());
    DivisiblePart D;
    D.ctx = ctx;
    IntPoly h = char_poly(A);
    D.t = t_multiplicity(h, ctx.p);
    D.Q = IntMatrix::identity(n);
    D.Qinv = IntMatrix::identity(n);
    if (D.t == 0) {
        D.basis = IntMatrix(n, 0);
        return D;
    }
    if (D.t == n) {
        D.basis = IntMatrix::identity(n);
        return D;
    }
    const Integer q = ctx.modulus();
    auto [h1, h2] = hensel_split(h, ctx.p, ctx.N);
    IntMatrix W = reduce(eval_matrix(h2, A), q);
    IntMatrix& Q = D.Q;
    IntMatrix& Qi = D.Qinv;

    int k = 0;
    for (; k < n; ++k) {
        int bi = -1, bj = -1, bv = static_cast<int>(ctx.N);
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                int v = vmod(W(i, j), ctx.p, ctx.N);
                if (v < bv) bv = v, bi = i, bj = j;
            }
        if (bi < 0) break;
        if (bi != k)
            for (int c = 0; c < n; ++c) std::swap(W(bi, c), W(k, c));
        if (bj != k) {
            for (int r = 0; r < n; ++r) {
                std::swap(W(r, bj), W(r, k));
                std::swap(Q(r, bj), Q(r, k));
            }
            for (int c = 0; c < n; ++c) std::swap(Qi(bj, c), Qi(k, c));
        }
        const Integer pv = pow_int(ctx.p, bv);
        const Integer uinv = inverse_mod(Integer(W(k, k) / pv), q);
        for (int r = k + 1; r < n; ++r) {
            if (W(r, k) == 0) continue;
            Integer f = nonneg_mod(Integer(W(r, k) / pv) * uinv, q);
            for (int c = k; c < n; ++c) W(r, c) = nonneg_mod(W(r, c) - f * W(k, c), q);
        }
        for (int c = k + 1; c < n; ++c) {
            if (W(k, c) == 0) continue;
            Integer f = nonneg_mod(Integer(W(k, c) / pv) * uinv, q);
            for (int r = 0; r < n; ++r) {
                W(r, c) = nonneg_mod(W(r, c) - f * W(r, k), q);
                Q(r, c) = nonneg_mod(Q(r, c) - f * Q(r, k), q);
            }
            for (int r = 0; r < n; ++r) Qi(k, r) = nonneg_mod(Qi(k, r) + f * Qi(c, r), q);
        }
        D.v_s = std::max(D.v_s, bv);
    }
    if (n - k != D.t) throw MathError("divisible part: precision p^" + std::to_string(ctx.N) + " too low");

    // Kernel positions are k..n-1; move them to the front.
    std::vector<int> order;
    for (int i = k; i < n; ++i) order.push_back(i);
    for (int i = 0; i < k; ++i) order.push_back(i);
    IntMatrix Q2(n, n), Qi2(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            Q2(r, c) = Q(r, order[c]);
            Qi2(c, r) = Qi(order[c], r);
        }
    D.Q = Q2;
    D.Qinv = Qi2;
    D.basis = IntMatrix(n, D.t);
    for (int c = 0; c < D.t; ++c)
        for (int r = 0; r < n; ++r) D.basis(r, c) = Q2(r, c);
    return D;
}

CharacteristicSet characteristic_set(const IntMatrix& A, const PadicContext& ctx)
{
    DivisiblePart D = divisible_part(A, ctx);
    const int n = static_cast<int>(A.rows()), t = D.t;
    if (t == 0 || t == n) throw MathError("characteristic set requires 0 < t_p < n");
    const Integer q = ctx.modulus();

    // First t-subset of rows (lexicographic) whose block is invertible mod p.
    std::vector<int> sel(t);
    std::iota(sel.begin(), sel.end(), 0);
    auto block_det = [&](const std::vector<int>& rows) {
        IntMatrix B(t, t);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) B(i, j) = D.basis(rows[i], j);
        return determinant(B);
    };
    for (;;) {
        if (!mpz_divisible_p(block_det(sel).get_mpz_t(), ctx.p.get_mpz_t())) break;
        int i = t - 1;
        while (i >= 0 && sel[i] == n - t + i) --i;
        if (i < 0) throw MathError("divisible part basis is degenerate mod p");
        ++sel[i];
        for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
    }
    CharacteristicSet cs;
    cs.ctx = ctx;
    cs.t = t;
    cs.permutation = sel;
    for (int i = 0; i < n; ++i)
        if (std::find(sel.begin(), sel.end(), i) == sel.end()) cs.permutation.push_back(i);

    IntMatrix B(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) B(i, j) = D.basis(sel[i], j);
    RatMatrix Binv = inverse(B);
    IntMatrix Bi(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) Bi(i, j) = rational_mod(Binv(i, j), q);
    IntMatrix Bn = reduce(D.basis * Bi, q);
    cs.alpha = IntMatrix(t, n - t);
    for (int i = 0; i < t; ++i)
        for (int j = t; j < n; ++j) cs.alpha(i, j - t) = Bn(cs.permutation[j], i);
    return cs;
}

unsigned policy_precision(const IntMatrix& A, const RatMatrix& T, const Integer& p)
{
    const unsigned e = max_den_exponent(T, p);
    const unsigned slack = 4;
    unsigned N = std::max<unsigned>(kPrecisionFloor, 2 * e + 8 + slack);
    for (int tries = 0; tries < 8; ++tries, N *= 2) {
        try {
            DivisiblePart D = divisible_part(A, PadicContext{p, N, slack});
            unsigned need = 2 * e + static_cast<unsigned>(D.v_s) + 8 + slack;
            return std::max<unsigned>(kPrecisionFloor, need);
        } catch (const MathError&) {
        }
    }
    throw MathError("divisible part not resolved below p^" + std::to_string(N));
}

PadicContext policy_context(const IntMatrix& A, const RatMatrix& T, const Integer& p)
{
    return PadicContext{p, policy_precision(A, T, p), 4};
}

LocalDecision local_end_check(const IntMatrix& A, const RatMatrix& T, const PadicContext& ctx)
{
    if (!A.square() || !T.square() || A.rows() != T.rows()) throw MathError("dimension mismatch");
    const unsigned need = policy_precision(A, T, ctx.p);
    if (ctx.N < need)
        throw PrecisionPolicyError("precision p^" + std::to_string(ctx.N) + " below policy minimum p^" + std::to_string(need));
    LocalDecision first = decide_once(A, T, ctx);
    PadicContext twice = ctx;
    twice.N = 2 * ctx.N;
    LocalDecision second = decide_once(A, T, twice);
    if (first.verdict != second.verdict) {
        first.verdict = Verdict::Inconclusive;
        first.failed = "precision doubling disagreement";
    }
    return first;
}

}  // namespace gaend
