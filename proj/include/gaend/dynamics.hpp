#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaend/endo.hpp"
#include "gaend/numberfield.hpp"

namespace gaend {

struct EigenData {
    FieldPtr K;
    IntMatrix A;
    NfElement lambda;
    std::vector<NfElement> u;  // A u = lambda u, Z[lambda]-integral, primitive
    std::vector<NfElement> w;  // A^t w = lambda w, w . u = 1
    std::vector<PrimeIdealData> S_lambda;
};

/// Requires h_A irreducible; S_lambda needs p-maximality at every p | det A.
EigenData eigen_data(const IntMatrix& A, bool assert_monogenic = false);

NfElement mu_project(const EigenData& ed, const RatVector& x);
RatVector mu_lift(const EigenData& ed, const NfElement& x1);

/// Smallest k <= max_k with A^k x integral, if any.
std::optional<int> bounded_membership(const IntMatrix& A, const RatVector& x, int max_k);

struct YModuleDescription {
    std::vector<NfElement> generators;
    std::string statement;
    std::string lower_bound;
    std::string upper_bound;
    /// lambda^{+-1} u_i re-expressed in the u-basis has coefficients in Z
    /// (for lambda) and R (for lambda^-1).
    bool lambda_stable = false;
};

YModuleDescription y_module(const EigenData& ed);

bool is_dense(const IntMatrix& A);

/// YES iff xi = iota(T) is nonzero and not a root of unity. INCONCLUSIVE
/// when h_A is reducible, P' is empty or no p in P' has gcd(n, t_p) = 1.
Decision is_ergodic(const IntMatrix& A, const RatMatrix& T);

/// |F_k| = |N(xi^k - 1)| * prod_{P in S_lambda} N(P)^(-val_P(xi^k - 1)).
Integer periodic_points(const EigenData& ed, const NfElement& xi, unsigned k);
Integer periodic_points(const IntMatrix& A, const RatMatrix& T, unsigned k, bool assert_monogenic = false);

/// Same count from the full prime factorization of (xi^k - 1) away from S_lambda.
Integer periodic_points_by_ideals(const EigenData& ed, const NfElement& xi, unsigned k);

struct EntropyResult {
    double h = 0;
    std::string h_decimal;
    double finite_part = 0;
    double archimedean_part = 0;
    std::vector<Integer> counts;   // |F_k|, k = 1..k_max
    std::vector<double> growth;    // (1/k) log |F_k|
    long precision_bits = 0;
};

EntropyResult entropy(const EigenData& ed, const NfElement& xi, long precision_bits = 128, int k_max = 8);
EntropyResult entropy(const IntMatrix& A, const RatMatrix& T, long precision_bits = 128, int k_max = 8,
                      bool assert_monogenic = false);

}  // namespace gaend
