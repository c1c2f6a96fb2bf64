#pragma once

#include <utility>
#include <vector>

#include "gaend/poly.hpp"

namespace gaend {

using Factorization = std::vector<std::pair<IntPoly, int>>;

/// Largest supported degree for factor_over_z.
constexpr long kMaxFactorDegree = 8;

/// Irreducible factorization over Z. Factors are primitive with positive
/// leading coefficient, sorted by (degree, coefficients). A constant factor
/// (sign times content) is listed first, with multiplicity 1, only when it
/// differs from 1.
Factorization factor_over_z(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

/// Factorization over F_p into monic irreducibles with coefficients in
/// [0, p), sorted. A leading constant is listed first when it is not 1.
/// Throws when f vanishes mod p.
Factorization factor_mod_p(const IntPoly& f, const Integer& p);

/// Largest t with x^t dividing f mod p.
int t_multiplicity(const IntPoly& f, const Integer& p);

/// For monic h with t = t_p(h): h = h1 * h2 mod p^N with h2 monic of degree
/// t, h2 = x^t mod p, h1(0) a unit mod p. Coefficients in [0, p^N).
std::pair<IntPoly, IntPoly> hensel_split(const IntPoly& h, const Integer& p, unsigned N);

}  // namespace gaend
