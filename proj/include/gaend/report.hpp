#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gaend/dynamics.hpp"
#include "gaend/endo.hpp"
#include "gaend/odometer.hpp"

namespace gaend {

using Json = nlohmann::ordered_json;

/// Integers within 53 bits are emitted as numbers, larger ones as strings.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const IntPoly& f);
Json to_json(const RatPoly& f);
Json to_json(const LocalDecision& d);
Json to_json(const Certificate& c);
Json to_json(const Decision& d);
Json to_json(const EndDescription& e);
Json to_json(const LinRepDescription& l);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
/// "I" denotes the identity of dimension n (n = 0 rejects it).
IntMatrix int_matrix_from_json(const Json& j, std::size_t n = 0);
RatMatrix rat_matrix_from_json(const Json& j, std::size_t n = 0);
IntPoly int_poly_from_json(const Json& j);
RatPoly rat_poly_from_json(const Json& j);
LocalDecision local_decision_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
Decision decision_from_json(const Json& j);
EndDescription end_description_from_json(const Json& j);
LinRepDescription linrep_from_json(const Json& j);

/// Parses JSON text, quoting integer literals too long for 64 bits first so
/// they survive exactly.
Json parse_json_exact(const std::string& text);

struct InvariantsBlock {
    Integer det;
    IntPoly h;
    std::vector<Integer> P;
    std::vector<Integer> P_prime;
    std::map<Integer, int> t;
    bool irreducible = false;

    bool operator==(const InvariantsBlock&) const = default;
};

InvariantsBlock invariants_block(const GaInvariants& inv);

struct NamedDecision {
    std::string name;
    Decision decision;

    bool operator==(const NamedDecision&) const = default;
};

struct PeriodicCount {
    unsigned k = 0;
    Integer count;

    bool operator==(const PeriodicCount&) const = default;
};

struct DynamicsBlock {
    std::optional<RatPoly> xi;  // iota(T) in powers of lambda
    std::vector<PeriodicCount> periodic;
    std::optional<double> entropy;
    std::string entropy_decimal;
    std::vector<double> growth;  // (1/k) log |F_k|, k = 1..max_k

    bool operator==(const DynamicsBlock&) const = default;
};

struct Diagnostics {
    std::optional<unsigned> padic_precision;  // user override
    std::map<std::string, unsigned> padic_precision_used;  // "p" -> N
    long archimedean_bits = 0;
    int oracle_depth_m = 0;
    int oracle_depth_k = 0;
    std::map<std::string, double> timings_ms;

    bool operator==(const Diagnostics&) const = default;
};

struct AnalysisReport {
    std::string command;
    IntMatrix A;
    std::optional<RatMatrix> T;
    std::vector<unsigned> k;
    std::optional<InvariantsBlock> invariants;
    std::optional<EndDescription> end_description;
    std::optional<LinRepDescription> linrep;
    std::vector<NamedDecision> decisions;
    std::optional<DynamicsBlock> dynamics;
    std::vector<std::string> notes;
    Diagnostics diagnostics;

    bool operator==(const AnalysisReport&) const = default;
};

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

/// Short multi-line summary for terminals.
std::string summary_text(const AnalysisReport& r);

}  // namespace gaend
