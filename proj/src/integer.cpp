#include "gaend/integer.hpp"

#include <algorithm>
#include <array>

namespace gaend {

namespace {

constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Integer& n, unsigned long base)
{
    Integer d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Integer x;
    Integer a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

Integer pollard_brent(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(128, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::vector<Integer>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    for (unsigned long a : kWitnesses)
        if (!miller_rabin(n, a)) return false;
    static const Integer kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n)
{
    if (n == 0) throw MathError("cannot factor zero");
    Integer m = abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    if (m > 1) factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, int>> result;
    for (const auto& p : primes) {
        if (!result.empty() && result.back().first == p)
            ++result.back().second;
        else
            result.emplace_back(p, 1);
    }
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n)
{
    std::vector<Integer> out;
    for (auto& [p, e] : factor_integer(n)) out.push_back(p);
    return out;
}

Integer radical(const Integer& n)
{
    Integer r = 1;
    for (auto& [p, e] : factor_integer(n)) r *= p;
    return r;
}

bool is_squarefree(const Integer& n)
{
    for (auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

int valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw MathError("valuation of zero");
    Integer m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& q, const Integer& p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

std::vector<Integer> divisors(const Integer& n)
{
    std::vector<Integer> out{1};
    for (auto& [p, e] : factor_integer(n)) {
        std::size_t count = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool denominator_supported_on(const Rational& q, const std::vector<Integer>& primes)
{
    Integer d = q.get_den();
    for (const auto& p : primes)
        while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) d /= p;
    return d == 1;
}

bool in_z_inverse(const Rational& q, const Integer& m)
{
    Integer d = q.get_den();
    Integer g;
    while (d != 1) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        if (g == 1) return false;
        d /= g;
    }
    return true;
}

Integer pow_int(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer nonneg_mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer symmetric_mod(const Integer& a, const Integer& m)
{
    Integer r = nonneg_mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m)
{
    Integer r;
    Integer aa = nonneg_mod(a, m);
    if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), m.get_mpz_t()) == 0)
        throw MathError("element not invertible modulo " + m.get_str());
    return r;
}

Integer rational_mod(const Rational& q, const Integer& m)
{
    return nonneg_mod(q.get_num() * inverse_mod(q.get_den(), m), m);
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t)
{
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gaend
