#include "gaend/endo.hpp"

#include <algorithm>

#include "gaend/factor.hpp"

namespace gaend {

GaInvariants invariants(const IntMatrix& A)
{
    if (!A.square() || A.rows() == 0) throw MathError("matrix must be square and nonempty");
    GaInvariants inv;
    inv.A = A;
    inv.n = static_cast<int>(A.rows());
    inv.det = determinant(A);
    if (inv.det == 0) throw MathError("singular matrix: det A = 0");
    inv.h = char_poly(A);
    inv.P = prime_divisors(inv.det);
    inv.rad_det = radical(inv.det);
    for (const auto& p : inv.P) {
        int t = t_multiplicity(inv.h, p);
        inv.t[p] = t;
        if (t < inv.n) inv.P_prime.push_back(p);
    }
    inv.irreducible = inv.n == 1 || is_irreducible(inv.h);
    return inv;
}

bool in_R(const Rational& q, const GaInvariants& inv) { return denominator_supported_on(q, inv.P); }

bool in_R(const RatMatrix& T, const GaInvariants& inv)
{
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j)
            if (!in_R(T(i, j), inv)) return false;
    return true;
}

bool has_coprime_t(const GaInvariants& inv)
{
    for (const auto& p : inv.P_prime) {
        Integer g = gcd(Integer(inv.n), Integer(inv.t.at(p)));
        if (g == 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------- n = 2

const char* case2d_name(Case2d c)
{
    switch (c) {
    case Case2d::Easy: return "Easy";
    case Case2d::IrreducibleA: return "IrreducibleA";
    case Case2d::CaseB: return "CaseB";
    default: return "CaseC";
    }
}

namespace {

IntVector primitive_eigenvector(const IntMatrix& A, const Integer& lam)
{
    RatMatrix B = to_rational(A) - RatMatrix::scalar(A.rows(), Rational(lam));
    RatMatrix ker = kernel(B);
    if (ker.cols() != 1) throw MathError("eigenspace is not one-dimensional");
    RatVector v = ker.column(0);
    Integer d = common_denominator(v);
    IntVector w;
    Integer g = 0;
    for (auto& a : v) {
        Rational s = a * d;
        w.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.back().get_mpz_t());
    }
    for (auto& a : w) a /= g;
    // First nonzero coordinate positive.
    for (auto& a : w)
        if (a != 0) {
            if (a < 0)
                for (auto& b : w) b = -b;
            break;
        }
    return w;
}

bool rad_divides(const Integer& a, const Integer& b)
{
    for (const auto& p : prime_divisors(a))
        if (!mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) return false;
    return true;
}

Integer integer_root(const IntPoly& linear) { return -linear.coeffs()[0]; }

}  // namespace

Classification2d classify2d(const IntMatrix& A)
{
    if (A.rows() != 2 || A.cols() != 2) throw MathError("classify2d requires a 2x2 matrix");
    GaInvariants inv = invariants(A);
    Classification2d c;
    if (inv.P.empty() || inv.P_prime.empty()) {
        c.tag = Case2d::Easy;
        return c;
    }
    if (inv.irreducible) {
        c.tag = Case2d::IrreducibleA;
        return c;
    }
    std::vector<Integer> roots;
    for (auto& [f, e] : factor_over_z(inv.h)) {
        if (f.degree() != 1) continue;
        for (int i = 0; i < e; ++i) roots.push_back(integer_root(f));
    }
    if (roots.size() != 2 || roots[0] == roots[1]) throw MathError("unexpected eigenvalue structure");
    Integer a = roots[0], b = roots[1];
    bool ab = rad_divides(a, b), ba = rad_divides(b, a);
    if (ab || ba) {
        c.tag = Case2d::CaseC;
        // rad(lambda2) | rad(lambda1).
        if (ab) std::swap(a, b);
        c.lambda1 = a;
        c.lambda2 = b;
    } else {
        c.tag = Case2d::CaseB;
        if (abs(b) < abs(a) || (abs(b) == abs(a) && b < a)) std::swap(a, b);
        c.lambda1 = a;
        c.lambda2 = b;
    }
    IntVector e1 = primitive_eigenvector(A, c.lambda1);
    IntVector e2 = primitive_eigenvector(A, c.lambda2);
    Integer x, y;
    ext_gcd(e1[0], e1[1], x, y);
    c.S = IntMatrix{{x, y}, {-e1[1], e1[0]}};
    IntVector uv = c.S * e2;
    if (uv[1] < 0) uv[0] = -uv[0], uv[1] = -uv[1];
    c.u = uv[0];
    c.v = uv[1];
    return c;
}

bool closed_form_membership(const IntMatrix& A, const RatMatrix& T)
{
    Classification2d c = classify2d(A);
    if (c.tag != Case2d::CaseB && c.tag != Case2d::CaseC) throw MathError("closed forms apply to cases (b) and (c) only");
    GaInvariants inv = invariants(A);
    RatMatrix S = to_rational(c.S);
    RatMatrix Tn = S * T * inverse(S);
    if (c.tag == Case2d::CaseB) {
        RatMatrix M{{1, Rational(c.u)}, {0, Rational(c.v)}};
        RatMatrix X = inverse(M) * Tn * M;
        if (X(0, 1) != 0 || X(1, 0) != 0) return false;
        const Rational &x1 = X(0, 0), &x2 = X(1, 1);
        return in_z_inverse(x1, abs(c.lambda1)) && in_z_inverse(x2, abs(c.lambda2)) &&
               in_R(Rational((x1 - x2) / Rational(c.v)), inv);
    }
    if (Tn(1, 0) != 0) return false;
    return in_R(Tn, inv) && in_z_inverse(Tn(1, 1), abs(c.lambda2));
}

// ---------------------------------------------------------------- decisions

Decision padic_membership(const IntMatrix& A, const RatMatrix& T, unsigned precision)
{
    GaInvariants inv = invariants(A);
    if (!T.square() || T.rows() != A.rows()) throw MathError("transform dimension does not match the matrix");
    Decision d;
    for (const auto& q : denominator_primes(T))
        if (!std::binary_search(inv.P.begin(), inv.P.end(), q)) {
            d.verdict = Verdict::No;
            d.cert.kind = "denominator";
            d.cert.failing_prime = q;
            d.cert.failing_condition = "denominator prime outside P";
            return d;
        }
    if (inv.P.empty()) {
        d.verdict = Verdict::Yes;
        d.cert.kind = "integral";
        return d;
    }
    if (inv.P_prime.empty()) {
        d.verdict = Verdict::Yes;
        d.cert.kind = "denominators in R";
        return d;
    }
    d.cert.kind = "local";
    bool inconclusive = false;
    for (const auto& p : inv.P_prime) {
        LocalDecision ld;
        try {
            PadicContext ctx = precision ? PadicContext{p, precision, 4} : policy_context(A, T, p);
            ld = local_end_check(A, T, ctx);
        } catch (const PrecisionPolicyError&) {
            throw;
        } catch (const MathError& e) {
            ld.p = p;
            ld.verdict = Verdict::Inconclusive;
            ld.failed = e.what();
        }
        d.cert.transcripts.push_back(ld);
        if (ld.verdict == Verdict::No) {
            d.verdict = Verdict::No;
            d.cert.failing_prime = p;
            d.cert.failing_condition = ld.failed;
            return d;
        }
        if (ld.verdict == Verdict::Inconclusive) inconclusive = true;
    }
    d.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Yes;
    return d;
}

Decision is_endomorphism(const IntMatrix& A, const RatMatrix& T, unsigned precision)
{
    Decision d = padic_membership(A, T, precision);
    if (A.rows() == 2 && d.cert.kind == "local") {
        Classification2d c = classify2d(A);
        if (c.tag == Case2d::CaseB || c.tag == Case2d::CaseC) {
            bool cf = closed_form_membership(A, T);
            d.cert.note = std::string("closed form (") + case2d_name(c.tag) + "): " + (cf ? "member" : "not a member");
            if (d.verdict != Verdict::Inconclusive && cf != (d.verdict == Verdict::Yes)) {
                d.verdict = Verdict::Inconclusive;
                d.cert.note += "; disagrees with the local decision";
            }
        }
    }
    return d;
}

Decision is_automorphism(const IntMatrix& A, const RatMatrix& T, unsigned precision)
{
    Decision d;
    if (determinant(T) == 0) {
        d.verdict = Verdict::No;
        d.cert.kind = "singular";
        d.cert.failing_condition = "det T = 0";
        return d;
    }
    Decision f = is_endomorphism(A, T, precision);
    Decision b = is_endomorphism(A, inverse(T), precision);
    if (f.verdict == Verdict::No || b.verdict == Verdict::No) {
        d = f.verdict == Verdict::No ? f : b;
        d.cert.note = f.verdict == Verdict::No ? "T is not an endomorphism" : "T^-1 is not an endomorphism";
        return d;
    }
    d.cert = f.cert;
    d.cert.kind = "automorphism";
    for (auto& t : b.cert.transcripts) d.cert.transcripts.push_back(t);
    d.verdict = f.verdict == Verdict::Yes && b.verdict == Verdict::Yes ? Verdict::Yes : Verdict::Inconclusive;
    return d;
}

Decision bounded_oracle(const IntMatrix& A, const RatMatrix& T, int depth_m, int depth_k)
{
    GaInvariants inv = invariants(A);
    Decision d;
    d.cert.kind = "oracle";
    if (!in_R(T, inv)) {
        d.verdict = Verdict::No;
        for (const auto& q : denominator_primes(T))
            if (!std::binary_search(inv.P.begin(), inv.P.end(), q)) {
                d.cert.failing_prime = q;
                break;
            }
        d.cert.failing_condition = "T not in M_n(R)";
        return d;
    }
    RatMatrix Ar = to_rational(A);
    RatMatrix Ainv = inverse(Ar);
    RatMatrix Tm = T;
    for (int m = 0; m <= depth_m; ++m) {
        RatMatrix cur = Tm;
        int found = -1;
        for (int k = 0; k <= depth_k; ++k) {
            if (is_integral(cur)) {
                found = k;
                break;
            }
            cur = Ar * cur;
        }
        if (found < 0) {
            d.verdict = Verdict::Inconclusive;
            d.cert.oracle = "negative";
            d.cert.failing_m = m;
            return d;
        }
        d.cert.witnesses.push_back({m, found});
        Tm = Tm * Ainv;
    }
    d.verdict = Verdict::Inconclusive;
    d.cert.oracle = "positive";
    return d;
}

RatPoly commutant_poly(const IntMatrix& A, const RatMatrix& T)
{
    RatMatrix Ar = to_rational(A);
    if (Ar * T != T * Ar) throw MathError("not in the commutant: T A != A T");
    const std::size_t n = A.rows();
    // Krylov basis on the first vector that is cyclic.
    for (std::size_t s = 0; s < n; ++s) {
        RatVector e(n);
        e[s] = 1;
        RatMatrix Kr(n, n);
        RatVector col = e;
        for (std::size_t j = 0; j < n; ++j) {
            Kr.set_column(j, col);
            col = Ar * col;
        }
        if (rank(Kr) < n) continue;
        RatVector c = solve(Kr, T.column(s));
        RatPoly q(c);
        if (eval_matrix(q, Ar) == T) return q;
        break;
    }
    throw MathError("T commutes with A but is not a polynomial in A");
}

NfElement iota(const FieldPtr& K, const IntMatrix& A, const RatMatrix& T)
{
    if (T.is_zero()) throw MathError("iota: T = 0");
    try {
        return NfElement::from_poly(K, commutant_poly(A, T));
    } catch (const MathError& e) {
        std::string w = e.what();
        if (w.rfind("not in the commutant", 0) == 0)
            throw MathError(w + " (when some p in P' has gcd(n, t_p) = 1 this certifies T is not an endomorphism)");
        throw;
    }
}

NfElement iota(const IntMatrix& A, const RatMatrix& T)
{
    return iota(NumberField::create(char_poly(A)), A, T);
}

// ---------------------------------------------------------------- descriptions

const char* end_tag_name(EndTag t)
{
    switch (t) {
    case EndTag::AllInteger: return "AllInteger";
    case EndTag::AllR: return "AllR";
    case EndTag::TwoDimCaseB: return "TwoDimCaseB";
    case EndTag::TwoDimCaseC: return "TwoDimCaseC";
    case EndTag::QuadraticIrr: return "QuadraticIrr";
    case EndTag::MonogenicIrr: return "MonogenicIrr";
    case EndTag::IrrGeneral: return "IrrGeneral";
    default: return "Unclassified";
    }
}

std::optional<EndTag> end_tag_from_name(const std::string& s)
{
    for (int i = 0; i <= static_cast<int>(EndTag::Unclassified); ++i)
        if (s == end_tag_name(static_cast<EndTag>(i))) return static_cast<EndTag>(i);
    return std::nullopt;
}

RatPoly quadratic_omega(const IntPoly& h)
{
    if (h.degree() != 2 || h.lead() != 1) throw MathError("quadratic_omega requires a monic quadratic");
    const Integer beta = h.coeff(1), gamma = h.coeff(0);
    const Integer D = beta * beta - 4 * gamma;
    Integer m = 1, d = D < 0 ? Integer(-1) : Integer(1);
    for (auto& [p, e] : factor_integer(D)) {
        m *= pow_int(p, e / 2);
        if (e % 2) d *= p;
    }
    // lambda = (-beta + m sqrt d) / 2.
    RatPoly sqrt_d{Rational(beta) / Rational(m), Rational(2) / Rational(m)};
    if (nonneg_mod(d, 4) == 1) return (sqrt_d + RatPoly::constant(1)) * Rational(1, 2);
    return sqrt_d;
}

AlphaResult alpha_generator(const IntMatrix& A)
{
    GaInvariants inv = invariants(A);
    if (inv.n != 2) throw MathError("alpha_generator requires n = 2");
    if (!inv.irreducible) throw MathError("alpha_generator requires an irreducible characteristic polynomial");
    if (inv.P_prime.empty()) throw MathError("alpha_generator requires P' nonempty");
    FieldPtr K = NumberField::create(inv.h);
    AlphaResult r;
    r.index = field_index(*K, inv.det);
    RatPoly omega = quadratic_omega(inv.h);
    RatMatrix Ar = to_rational(A);
    RatMatrix Tw = eval_matrix(omega, Ar);
    r.alpha = 0;
    for (const auto& b : divisors(r.index.l2))
        if (in_R(Tw * Rational(b), inv)) {
            r.alpha = b;
            break;
        }
    if (r.alpha == 0) throw MathError("alpha search did not terminate at l2");
    EndDescription& e = r.description;
    e.tag = EndTag::QuadraticIrr;
    e.field_poly = inv.h;
    e.omega = omega;
    e.alpha = r.alpha;
    e.generators = {RatPoly::constant(1), omega * Rational(r.alpha)};
    e.statement = r.alpha == 1 ? "iota(End(G_A)) = O_K[1/lambda], generated by {1, omega} over Z[lambda^{+-1}]"
                               : "iota(End(G_A)) generated by {1, " + r.alpha.get_str() + "*omega} over Z[lambda^{+-1}]";
    return r;
}

EndDescription end_ring_description(const IntMatrix& A, bool assert_monogenic)
{
    GaInvariants inv = invariants(A);
    EndDescription e;
    if (inv.P.empty()) {
        e.tag = EndTag::AllInteger;
        e.statement = "End(G_A) = M_n(Z)";
        return e;
    }
    if (inv.P_prime.empty()) {
        e.tag = EndTag::AllR;
        e.statement = "End(G_A) = M_n(R), R = Z[1/" + inv.rad_det.get_str() + "]";
        return e;
    }
    if (inv.n == 2) {
        Classification2d c = classify2d(A);
        if (c.tag == Case2d::IrreducibleA) return alpha_generator(A).description;
        e.lambda1 = c.lambda1;
        e.lambda2 = c.lambda2;
        e.v = c.v;
        if (c.tag == Case2d::CaseB) {
            e.tag = EndTag::TwoDimCaseB;
            e.statement = "T = M diag(x1, x2) M^-1 with x_i in Z[1/lambda_i] and v | x1 - x2 in R";
        } else {
            e.tag = EndTag::TwoDimCaseC;
            e.statement = "upper-triangular over R in the normalized basis, z in Z[1/lambda2]";
        }
        return e;
    }
    if (!inv.irreducible) {
        e.tag = EndTag::Unclassified;
        e.reason = "reducible characteristic polynomial with n >= 3 is not classified; membership is still decidable";
        return e;
    }
    e.field_poly = inv.h;
    if (!has_coprime_t(inv)) {
        e.tag = EndTag::Unclassified;
        e.reason = "no p in P' with gcd(n, t_p) = 1; End(G_A) need not be commutative";
        return e;
    }
    FieldPtr K = NumberField::create(inv.h, assert_monogenic);
    if (K->monogenic()) {
        e.tag = EndTag::MonogenicIrr;
        e.statement = "iota(End(G_A)) = Z[lambda^{+-1}] = O_K[1/lambda]";
        e.generators = {RatPoly::constant(1)};
    } else {
        e.tag = EndTag::IrrGeneral;
        e.statement = "Z[lambda^{+-1}] in iota(End(G_A)) in O_K[1/lambda], finitely generated";
    }
    return e;
}

}  // namespace gaend
