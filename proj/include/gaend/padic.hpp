#pragma once

#include <string>
#include <vector>

#include "gaend/factor.hpp"
#include "gaend/matrix.hpp"

namespace gaend {

enum class Verdict { Yes, No, Inconclusive };

/// Requested p-adic precision is below the policy minimum.
class PrecisionPolicyError : public MathError {
public:
    using MathError::MathError;
};

const char* verdict_name(Verdict v);

/// Computations are carried mod p^N; reported congruences hold mod
/// p^(N - slack).
struct PadicContext {
    Integer p;
    unsigned N = 32;
    unsigned slack = 4;

    Integer modulus() const { return pow_int(p, N); }
};

/// D_p(A) as the saturated kernel of h2(A) mod p^N, together with a
/// completion Q of its basis to GL_n(Z/p^N) (kernel columns first).
struct DivisiblePart {
    PadicContext ctx;
    int t = 0;
    IntMatrix basis;  // n x t
    IntMatrix Q;
    IntMatrix Qinv;
    int v_s = 0;  // largest valuation among nonzero invariants of h2(A)
};

DivisiblePart divisible_part(const IntMatrix& A, const PadicContext& ctx);

struct CharacteristicSet {
    PadicContext ctx;
    int t = 0;
    /// alpha(i, j - t) for 0 <= i < t <= j < n, in permuted coordinates.
    IntMatrix alpha;
    /// Coordinate order used: the first t entries are the pivot coordinates.
    std::vector<int> permutation;
};

CharacteristicSet characteristic_set(const IntMatrix& A, const PadicContext& ctx);

struct LocalDecision {
    Verdict verdict = Verdict::Inconclusive;
    Integer p;
    unsigned N = 0;
    int t = 0;
    /// "", "denominator", "invariance" (T D_p not in D_p) or "quotient".
    std::string failed;

    bool operator==(const LocalDecision&) const = default;
};

/// Smallest precision accepted by local_end_check for this (A, T, p).
unsigned policy_precision(const IntMatrix& A, const RatMatrix& T, const Integer& p);

PadicContext policy_context(const IntMatrix& A, const RatMatrix& T, const Integer& p);

/// Decides T(G_{A,p}) within G_{A,p} for the p-adic closure. Re-checked at 2N;
/// disagreement yields Inconclusive. ctx.N below policy_precision throws
/// PrecisionPolicyError.
LocalDecision local_end_check(const IntMatrix& A, const RatMatrix& T, const PadicContext& ctx);

}  // namespace gaend
