#include "doctest.h"

#include "gaend/report.hpp"
#include "support.hpp"

using namespace gaend;
using fixtures::rat;

namespace {

AnalysisReport sample()
{
    IntMatrix A = fixtures::cubic();
    RatMatrix T = fixtures::cubic_xi();
    AnalysisReport r;
    r.command = "analyze";
    r.A = A;
    r.T = T;
    r.k = {1, 2};
    r.invariants = invariants_block(invariants(A));
    r.end_description = end_ring_description(A);
    r.linrep = linear_rep_group_description(A);
    r.decisions.push_back({"endomorphism", is_endomorphism(A, T)});
    r.decisions.push_back({"oracle", bounded_oracle(A, T, 6, 12)});
    r.decisions.push_back({"lower", is_endomorphism(IntMatrix{{6, 0}, {0, 2}}, RatMatrix{{0, 0}, {1, 0}})});
    DynamicsBlock d;
    d.xi = RatPoly{Rational(-11, 54), Rational(11, 27), Rational(-7, 54)};
    d.periodic = {{1, 169}, {2, 38701}, {8, Integer("5855759527003425")}, {9, Integer("123456789012345678901234567890")}};
    d.entropy = 4.682131227124219;
    d.entropy_decimal = "4.68213122712421969302019995368";
    d.growth = {5.1298987149230735, 0.1};
    r.dynamics = d;
    r.notes = {"a note"};
    r.diagnostics.padic_precision = 40;
    r.diagnostics.padic_precision_used = {{"2", 40}, {"3", 40}};
    r.diagnostics.archimedean_bits = 128;
    r.diagnostics.oracle_depth_m = 6;
    r.diagnostics.oracle_depth_k = 12;
    r.diagnostics.timings_ms = {{"invariants", 1.25}};
    return r;
}

}  // namespace

TEST_CASE("integers beyond 53 bits are strings")
{
    CHECK(to_json(Integer("9007199254740991")).is_number());
    CHECK(to_json(Integer("9007199254740992")).is_string());
    CHECK(to_json(Integer("-9007199254740992")) == Json("-9007199254740992"));
    CHECK(to_json(Rational(3, 4)) == Json::array({3, 4}));
    Rational q(-6, 3);
    q.canonicalize();
    CHECK(to_json(q) == Json(-2));
}

TEST_CASE("report round trip")
{
    AnalysisReport r = sample();
    Json j = to_json(r);
    AnalysisReport back = report_from_json(j);
    CHECK(back == r);
    CHECK(report_from_json(parse_json_exact(j.dump())) == r);
    CHECK(report_from_json(parse_json_exact(j.dump(2))) == r);

    AnalysisReport minimal;
    minimal.command = "describe";
    minimal.A = IntMatrix::identity(2);
    CHECK(report_from_json(to_json(minimal)) == minimal);
}

TEST_CASE("stable key order")
{
    Json j = to_json(sample());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "input", "invariants", "classification", "decisions", "dynamics",
                                           "notes", "diagnostics"});
}

TEST_CASE("exact parsing of long integer literals")
{
    Json j = parse_json_exact(R"([[0,-0,6],[123456789012345678901234567,-98765432109876543210,1],"12345678901234567890"])");
    CHECK(integer_from_json(j[0][1]) == 0);
    CHECK(integer_from_json(j[1][0]) == Integer("123456789012345678901234567"));
    CHECK(integer_from_json(j[1][1]) == Integer("-98765432109876543210"));
    CHECK(integer_from_json(j[2]) == Integer("12345678901234567890"));
    CHECK_THROWS_AS(integer_from_json(parse_json_exact("1.5")), MathError);
    CHECK_THROWS_AS(integer_from_json(Json("12a")), MathError);
    CHECK_THROWS_AS(parse_json_exact("[[1,2],"), MathError);
}

TEST_CASE("matrix parsing")
{
    CHECK(int_matrix_from_json(parse_json_exact("[[1,2],[3,4]]")) == IntMatrix{{1, 2}, {3, 4}});
    CHECK(int_matrix_from_json(Json("I"), 3) == IntMatrix::identity(3));
    CHECK_THROWS_AS(int_matrix_from_json(Json("I")), MathError);
    CHECK_THROWS_AS(int_matrix_from_json(parse_json_exact("[[1,2],[3]]")), MathError);
    CHECK_THROWS_AS(int_matrix_from_json(parse_json_exact("[]")), MathError);
    RatMatrix T = rat_matrix_from_json(parse_json_exact("[[[1,2],3],[[4,-6],\"5\"]]"));
    CHECK(T == RatMatrix{{Rational(1, 2), 3}, {Rational(-2, 3), 5}});
    CHECK_THROWS_AS(rat_matrix_from_json(parse_json_exact("[[[1,0]]]")), MathError);
}
