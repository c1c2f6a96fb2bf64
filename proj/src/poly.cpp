#include "gaend/poly.hpp"

#include <sstream>

namespace gaend {

template <class T>
std::string Poly<T>::to_string() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        T a = c_[i];
        if (a == 0) continue;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1) os << gaend::to_string(a);
        if (i >= 1) os << (i == 0 || a != 1 ? "*x" : "x");
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

template class Poly<Integer>;
template class Poly<Rational>;

RatPoly to_rational(const IntPoly& f)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    return RatPoly(std::move(c));
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero()) return f;
    Integer g = content(f);
    if (f.lead() < 0) g = -g;
    std::vector<Integer> c(f.coeffs());
    for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& f)
{
    Integer d = 1;
    for (const auto& a : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Integer> c;
    for (const auto& a : f.coeffs()) c.push_back(Integer(a * d));
    return primitive_part(IntPoly(std::move(c)));
}

void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r)
{
    if (b.is_zero()) throw MathError("polynomial division by zero");
    std::vector<Rational> rc(a.coeffs());
    long db = b.degree();
    std::vector<Rational> qc(a.degree() >= db ? a.degree() - db + 1 : 0);
    Rational inv = 1 / b.lead();
    for (long k = a.degree() - db; k >= 0; --k) {
        Rational t = rc[k + db] * inv;
        qc[k] = t;
        if (t == 0) continue;
        for (long j = 0; j <= db; ++j) rc[k + j] -= t * b.coeffs()[j];
    }
    q = RatPoly(std::move(qc));
    r = RatPoly(std::move(rc));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a, y = b, q, r;
    while (!y.is_zero()) {
        divrem(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Rational(1 / x.lead());
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b)
{
    RatPoly q, r;
    divrem(to_rational(a), to_rational(b), q, r);
    if (!r.is_zero()) throw MathError("polynomial does not divide");
    std::vector<Integer> c;
    for (const auto& x : q.coeffs()) {
        if (x.get_den() != 1) throw MathError("polynomial does not divide over Z");
        c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

bool divides(const IntPoly& b, const IntPoly& a)
{
    if (b.is_zero()) return a.is_zero();
    RatPoly q, r;
    divrem(to_rational(a), to_rational(b), q, r);
    if (!r.is_zero()) return false;
    for (const auto& x : q.coeffs())
        if (x.get_den() != 1) return false;
    return true;
}

IntPoly pow(const IntPoly& f, unsigned long e)
{
    IntPoly r = IntPoly::constant(1), b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// ---------------------------------------------------------------- mod m

IntPoly reduce_mod(const IntPoly& f, const Integer& m)
{
    std::vector<Integer> c(f.coeffs());
    for (auto& a : c) a = nonneg_mod(a, m);
    return IntPoly(std::move(c));
}

IntPoly add_mod(const IntPoly& a, const IntPoly& b, const Integer& m) { return reduce_mod(a + b, m); }
IntPoly sub_mod(const IntPoly& a, const IntPoly& b, const Integer& m) { return reduce_mod(a - b, m); }
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) { return reduce_mod(a * b, m); }

void divrem_mod(const IntPoly& a, const IntPoly& b, const Integer& m, IntPoly& q, IntPoly& r)
{
    IntPoly bb = reduce_mod(b, m);
    if (bb.is_zero()) throw MathError("polynomial division by zero modulo " + m.get_str());
    Integer inv = inverse_mod(bb.lead(), m);
    std::vector<Integer> rc(reduce_mod(a, m).coeffs());
    long db = bb.degree();
    long da = static_cast<long>(rc.size()) - 1;
    std::vector<Integer> qc(da >= db ? da - db + 1 : 0);
    for (long k = da - db; k >= 0; --k) {
        Integer t = nonneg_mod(rc[k + db] * inv, m);
        qc[k] = t;
        if (t == 0) continue;
        for (long j = 0; j <= db; ++j) rc[k + j] = nonneg_mod(rc[k + j] - t * bb.coeffs()[j], m);
    }
    q = IntPoly(std::move(qc));
    r = IntPoly(std::move(rc));
}

IntPoly rem_mod(const IntPoly& a, const IntPoly& b, const Integer& m)
{
    IntPoly q, r;
    divrem_mod(a, b, m, q, r);
    return r;
}

IntPoly monic_mod(const IntPoly& f, const Integer& m)
{
    IntPoly g = reduce_mod(f, m);
    if (g.is_zero()) return g;
    return reduce_mod(g * inverse_mod(g.lead(), m), m);
}

IntPoly powmod(const IntPoly& base, const Integer& e, const IntPoly& f, const Integer& m)
{
    IntPoly r = rem_mod(IntPoly::constant(1), f, m);
    IntPoly b = rem_mod(base, f, m);
    std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem_mod(r * r, f, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem_mod(r * b, f, m);
    }
    return r;
}

IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, const Integer& p)
{
    IntPoly x = reduce_mod(a, p), y = reduce_mod(b, p);
    while (!y.is_zero()) {
        IntPoly r = rem_mod(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return monic_mod(x, p);
}

IntPoly xgcd_mod_p(const IntPoly& a, const IntPoly& b, const Integer& p, IntPoly& s, IntPoly& t)
{
    IntPoly r0 = reduce_mod(a, p), r1 = reduce_mod(b, p);
    IntPoly s0 = IntPoly::constant(1), s1, t0, t1 = IntPoly::constant(1);
    while (!r1.is_zero()) {
        IntPoly q, r;
        divrem_mod(r0, r1, p, q, r);
        IntPoly s2 = sub_mod(s0, q * s1, p), t2 = sub_mod(t0, q * t1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    Integer inv = inverse_mod(r0.lead(), p);
    s = reduce_mod(s0 * inv, p);
    t = reduce_mod(t0 * inv, p);
    return reduce_mod(r0 * inv, p);
}

// ---------------------------------------------------------------- matrices

IntPoly char_poly(const IntMatrix& A)
{
    if (!A.square()) throw MathError("char_poly of non-square matrix");
    const std::size_t n = A.rows();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        IntMatrix AM = A * M;
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        Integer kk = static_cast<unsigned long>(k);
        if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t())) throw MathError("char_poly: inexact trace division");
        c[n - k] = -tr / kk;
    }
    return IntPoly(std::move(c));
}

RatPoly char_poly(const RatMatrix& A)
{
    if (!A.square()) throw MathError("char_poly of non-square matrix");
    const std::size_t n = A.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        c[n - k] = -trace(A * M) / Rational(static_cast<unsigned long>(k));
    }
    return RatPoly(std::move(c));
}

RatMatrix eval_matrix(const RatPoly& q, const RatMatrix& A)
{
    const std::size_t n = A.rows();
    RatMatrix r(n, n);
    for (std::size_t i = q.size(); i-- > 0;) {
        r = r * A;
        for (std::size_t j = 0; j < n; ++j) r(j, j) += q.coeffs()[i];
    }
    return r;
}

IntMatrix eval_matrix(const IntPoly& q, const IntMatrix& A)
{
    const std::size_t n = A.rows();
    IntMatrix r(n, n);
    for (std::size_t i = q.size(); i-- > 0;) {
        r = r * A;
        for (std::size_t j = 0; j < n; ++j) r(j, j) += q.coeffs()[i];
    }
    return r;
}

Integer resultant(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return 0;
    const std::size_t m = a.degree(), n = b.degree();
    if (m + n == 0) return 1;
    IntMatrix S(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S(i, i + j) = a.coeffs()[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S(n + i, i + j) = b.coeffs()[n - j];
    return determinant(S);
}

Integer discriminant(const IntPoly& f)
{
    long n = f.degree();
    if (n < 1) throw MathError("discriminant of a constant");
    Integer r = resultant(f, f.derivative());
    Integer d = r / f.lead();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

unsigned long euler_phi(unsigned long m)
{
    unsigned long r = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

IntPoly cyclotomic(unsigned long m)
{
    if (m == 0) throw MathError("cyclotomic index must be positive");
    IntPoly f = IntPoly::monomial(1, m) - IntPoly::constant(1);
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) f = exact_div(f, cyclotomic(d));
    return f;
}

int count_real_roots(const IntPoly& f)
{
    if (f.is_zero()) throw MathError("count_real_roots of zero");
    std::vector<RatPoly> seq{to_rational(f), to_rational(f.derivative())};
    while (!seq.back().is_zero()) {
        RatPoly q, r;
        divrem(seq[seq.size() - 2], seq.back(), q, r);
        seq.push_back(-r);
    }
    seq.pop_back();
    auto changes = [&](bool at_plus) {
        int count = 0, prev = 0;
        for (const auto& s : seq) {
            int sg = sgn(s.lead());
            if (!at_plus && s.degree() % 2) sg = -sg;
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    };
    return changes(false) - changes(true);
}

}  // namespace gaend
