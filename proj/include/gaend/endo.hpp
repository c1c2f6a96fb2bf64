#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaend/numberfield.hpp"
#include "gaend/padic.hpp"

namespace gaend {

struct GaInvariants {
    IntMatrix A;
    int n = 0;
    Integer det;
    IntPoly h;
    std::vector<Integer> P;        // primes dividing det A
    std::vector<Integer> P_prime;  // p in P with h != x^n mod p
    std::map<Integer, int> t;      // t_p for p in P
    Integer rad_det;
    bool irreducible = false;
};

/// Throws MathError for singular or non-square A.
GaInvariants invariants(const IntMatrix& A);

/// Membership of q in R = Z[1/det A].
bool in_R(const Rational& q, const GaInvariants& inv);
bool in_R(const RatMatrix& T, const GaInvariants& inv);

struct OracleWitness {
    int m = 0;
    int k = 0;

    bool operator==(const OracleWitness&) const = default;
};

struct Certificate {
    std::string kind;  // how the verdict was reached
    std::optional<Integer> failing_prime;
    std::string failing_condition;
    std::vector<LocalDecision> transcripts;
    std::vector<OracleWitness> witnesses;
    std::optional<int> failing_m;
    /// "positive" / "negative" for bounded-oracle runs.
    std::string oracle;
    std::string note;

    bool operator==(const Certificate&) const = default;
};

struct Decision {
    Verdict verdict = Verdict::Inconclusive;
    Certificate cert;

    bool operator==(const Decision&) const = default;
};

// ---------------------------------------------------------------- n = 2

enum class Case2d { Easy, IrreducibleA, CaseB, CaseC };
const char* case2d_name(Case2d c);

/// For reducible A: S in GL_2(Z) with S A S^-1 = M diag(l1, l2) M^-1,
/// M = [[1, u], [0, v]], v > 0.
struct Classification2d {
    Case2d tag = Case2d::Easy;
    Integer lambda1, lambda2, u, v;
    IntMatrix S;
};

Classification2d classify2d(const IntMatrix& A);

/// Closed-form membership for reducible 2x2 A in case (b) or (c).
bool closed_form_membership(const IntMatrix& A, const RatMatrix& T);

// ---------------------------------------------------------------- decisions

/// Denominator test followed by local_end_check at every p in P'. A nonzero
/// precision replaces the policy exponent (PrecisionPolicyError if too low).
Decision padic_membership(const IntMatrix& A, const RatMatrix& T, unsigned precision = 0);

/// padic_membership, cross-checked against the closed forms when n = 2 and
/// h_A is reducible (disagreement gives INCONCLUSIVE).
Decision is_endomorphism(const IntMatrix& A, const RatMatrix& T, unsigned precision = 0);

Decision is_automorphism(const IntMatrix& A, const RatMatrix& T, unsigned precision = 0);

/// Searches, for each m <= depth_m, some k <= depth_k with A^k T A^-m
/// integral. Only a denominator failure yields NO; otherwise the verdict is
/// INCONCLUSIVE with cert.oracle "positive" or "negative".
Decision bounded_oracle(const IntMatrix& A, const RatMatrix& T, int depth_m = 6, int depth_k = 12);

/// x = q(lambda) for T = q(A). Throws "not in the commutant" when TA != AT.
NfElement iota(const FieldPtr& K, const IntMatrix& A, const RatMatrix& T);
NfElement iota(const IntMatrix& A, const RatMatrix& T);

/// Coefficients of q with T = q(A), deg q < n; throws when TA != AT.
RatPoly commutant_poly(const IntMatrix& A, const RatMatrix& T);

// ---------------------------------------------------------------- descriptions

enum class EndTag { AllInteger, AllR, TwoDimCaseB, TwoDimCaseC, QuadraticIrr, MonogenicIrr, IrrGeneral, Unclassified };
const char* end_tag_name(EndTag t);
std::optional<EndTag> end_tag_from_name(const std::string& s);

struct EndDescription {
    EndTag tag = EndTag::Unclassified;
    std::string statement;
    // TwoDimCaseB / TwoDimCaseC
    Integer lambda1, lambda2, v;
    // QuadraticIrr / MonogenicIrr / IrrGeneral
    IntPoly field_poly;
    RatPoly omega;                    // in powers of lambda
    Integer alpha;
    std::vector<RatPoly> generators;  // over Z[lambda^{+-1}]
    std::string reason;

    bool operator==(const EndDescription&) const = default;
};

struct AlphaResult {
    Integer alpha;
    FieldIndex index;
    EndDescription description;
};

/// n = 2, h_A irreducible, P' nonempty.
AlphaResult alpha_generator(const IntMatrix& A);

/// Integral basis element omega of a quadratic field as a polynomial in
/// lambda, where lambda is a root of h = x^2 + beta x + gamma.
RatPoly quadratic_omega(const IntPoly& h);

EndDescription end_ring_description(const IntMatrix& A, bool assert_monogenic = false);

/// True when some p in P' has gcd(n, t_p) = 1.
bool has_coprime_t(const GaInvariants& inv);

}  // namespace gaend
