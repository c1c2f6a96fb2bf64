#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaend {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised for inputs that violate an operation's preconditions.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases); above
/// that bound the same bases plus GMP's probabilistic test.
bool is_prime(const Integer& n);

/// Prime factorization of |n| with ascending primes. n = 0 is an error;
/// n = +-1 gives an empty list.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

std::vector<Integer> prime_divisors(const Integer& n);

/// Product of the distinct primes dividing n (1 for n = +-1).
Integer radical(const Integer& n);

bool is_squarefree(const Integer& n);

/// p-adic valuation; n must be nonzero.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

/// All positive divisors of |n| in increasing order.
std::vector<Integer> divisors(const Integer& n);

/// True when every prime dividing the denominator of q lies in `primes`.
bool denominator_supported_on(const Rational& q, const std::vector<Integer>& primes);

/// True when q is in Z[1/m], i.e. den(q) divides a power of m.
bool in_z_inverse(const Rational& q, const Integer& m);

Integer pow_int(const Integer& base, unsigned long e);

/// Symmetric residue of a mod m in (-m/2, m/2].
Integer symmetric_mod(const Integer& a, const Integer& m);

/// Nonnegative residue in [0, m).
Integer nonneg_mod(const Integer& a, const Integer& m);

/// Modular inverse; throws MathError when not invertible.
Integer inverse_mod(const Integer& a, const Integer& m);

/// Reduce a rational whose denominator is a unit mod m into [0, m).
Integer rational_mod(const Rational& q, const Integer& m);

/// Extended gcd: returns g >= 0 and s, t with s*a + t*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

/// Floor division for integers (GMP's / truncates).
Integer floor_div(const Integer& a, const Integer& b);

/// Decimal string; used by the JSON layer.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace gaend
