#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gaend/archimedean.hpp"
#include "gaend/report.hpp"

using namespace gaend;

namespace {

struct Options {
    std::string matrix, transform, xi_poly, input;
    long xi_power = 0;
    bool xi_power_set = false;
    std::vector<unsigned> k;
    unsigned precision_exponent = 0;
    long precision_bits = 128;
    std::vector<int> oracle_depth{6, 12};
    bool assert_monogenic = false;
    int max_k = 8;
};

class Timer {
public:
    Timer(AnalysisReport& r, std::string name) : r_(r), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
    ~Timer()
    {
        auto dt = std::chrono::steady_clock::now() - t0_;
        r_.diagnostics.timings_ms[name_] += std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    AnalysisReport& r_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

bool is_identity_token(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t == "I" || t == "\"I\"";
}

Json parse_arg(const std::string& s, const char* what)
{
    if (is_identity_token(s)) return Json("I");
    try {
        return parse_json_exact(s);
    } catch (const MathError& e) {
        throw MathError(std::string(what) + ": " + e.what());
    }
}

// Fills options absent from the command line and environment.
void merge_input_file(Options& o)
{
    std::ifstream in(o.input);
    if (!in) throw MathError("cannot read input file " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    Json j = parse_json_exact(ss.str());
    if (!j.is_object()) throw MathError("input file must hold a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "matrix" && key != "transform" && key != "k" && key != "xi")
            throw MathError("input file: unknown key '" + key + "'");
    if (o.matrix.empty() && j.contains("matrix")) o.matrix = j["matrix"].dump();
    if (o.transform.empty() && j.contains("transform")) o.transform = j["transform"].dump();
    if (o.k.empty() && j.contains("k")) {
        if (!j["k"].is_array()) throw MathError("input file: k must be an array");
        for (const auto& x : j["k"]) {
            Integer z = integer_from_json(x);
            if (z < 1 || !z.fits_uint_p()) throw MathError("input file: periods must be positive");
            o.k.push_back(static_cast<unsigned>(z.get_ui()));
        }
    }
    if (j.contains("xi")) {
        const Json& xi = j["xi"];
        if (!xi.is_object()) throw MathError("input file: xi must be an object");
        if (o.xi_poly.empty() && xi.contains("poly")) o.xi_poly = xi["poly"].dump();
        if (!o.xi_power_set && xi.contains("power")) {
            Integer z = integer_from_json(xi["power"]);
            if (!z.fits_slong_p()) throw MathError("input file: xi power out of range");
            o.xi_power = z.get_si();
            o.xi_power_set = true;
        }
    }
}

struct Inputs {
    IntMatrix A;
    std::optional<RatMatrix> T;
};

Inputs read_inputs(const Options& o)
{
    if (o.matrix.empty()) throw MathError("--matrix is required");
    Json jm = parse_arg(o.matrix, "--matrix");
    std::optional<Json> jt;
    if (!o.transform.empty()) jt = parse_arg(o.transform, "--transform");
    if (!o.transform.empty() && !o.xi_poly.empty()) throw MathError("give either --transform or --xi-poly, not both");

    Inputs in;
    if (jm.is_string()) {
        if (!jt || jt->is_string()) throw MathError("--matrix I needs a transform matrix to fix the dimension");
        RatMatrix T = rat_matrix_from_json(*jt);
        in.A = IntMatrix::identity(T.rows());
        in.T = T;
    } else {
        in.A = int_matrix_from_json(jm);
        if (jt) in.T = rat_matrix_from_json(*jt, in.A.rows());
    }
    if (!in.A.square()) throw MathError("matrix must be square");
    if (in.T && (!in.T->square() || in.T->rows() != in.A.rows())) throw MathError("transform must be square of the same size as the matrix");

    if (!o.xi_poly.empty()) {
        RatPoly q = rat_poly_from_json(parse_arg(o.xi_poly, "--xi-poly"));
        RatMatrix Ar = to_rational(in.A);
        if (determinant(Ar) == 0) throw MathError("matrix is singular");
        in.T = eval_matrix(q, Ar) * power(Ar, o.xi_power);
    } else if (o.xi_power_set && o.xi_power != 0) {
        throw MathError("--xi-power needs --xi-poly");
    }
    return in;
}

const RatMatrix& need_T(const Inputs& in, const std::string& cmd)
{
    if (!in.T) throw MathError(cmd + " needs --transform or --xi-poly");
    return *in.T;
}

void add_invariants(AnalysisReport& r, const IntMatrix& A)
{
    Timer t(r, "invariants");
    r.invariants = invariants_block(invariants(A));
}

void record_precisions(AnalysisReport& r, const IntMatrix& A, const RatMatrix& T)
{
    GaInvariants inv = invariants(A);
    for (const auto& p : inv.P_prime)
        r.diagnostics.padic_precision_used[p.get_str()] =
            r.diagnostics.padic_precision ? *r.diagnostics.padic_precision : policy_precision(A, T, p);
}

void add_dynamics(AnalysisReport& r, const IntMatrix& A, const RatMatrix& T, const Options& o, bool with_entropy)
{
    Timer t(r, "dynamics");
    EigenData ed = eigen_data(A, o.assert_monogenic);
    NfElement xi = iota(ed.K, A, T);
    DynamicsBlock d;
    d.xi = RatPoly(xi.coords());
    std::vector<unsigned> ks = o.k.empty() ? std::vector<unsigned>{1} : o.k;
    GaInvariants inv = invariants(A);
    if (!inv.P_prime.empty() && !has_coprime_t(inv))
        throw MathError("no p in P' with gcd(n, t_p) = 1");
    for (unsigned k : ks) d.periodic.push_back({k, periodic_points(ed, xi, k)});
    if (with_entropy && o.max_k > 0) {
        EntropyResult e = entropy(ed, xi, o.precision_bits, o.max_k);
        d.entropy = e.h;
        d.entropy_decimal = e.h_decimal;
        d.growth = e.growth;
    }
    r.dynamics = d;
}

bool any_inconclusive(const AnalysisReport& r)
{
    for (const auto& d : r.decisions)
        if (d.decision.verdict == Verdict::Inconclusive) return true;
    return false;
}

AnalysisReport run(const std::string& cmd, const Options& o)
{
    AnalysisReport r;
    r.command = cmd;
    r.k = o.k;
    if (o.precision_exponent) r.diagnostics.padic_precision = o.precision_exponent;
    r.diagnostics.archimedean_bits = o.precision_bits;
    r.diagnostics.oracle_depth_m = o.oracle_depth[0];
    r.diagnostics.oracle_depth_k = o.oracle_depth[1];

    Inputs in = read_inputs(o);
    r.A = in.A;
    r.T = in.T;
    const IntMatrix& A = in.A;
    add_invariants(r, A);
    const unsigned N = o.precision_exponent;

    if (cmd == "describe" || cmd == "analyze") {
        Timer t(r, "classification");
        r.end_description = end_ring_description(A, o.assert_monogenic);
        r.linrep = linear_rep_group_description(A);
    }
    if (cmd == "end-check") {
        const RatMatrix& T = need_T(in, cmd);
        Timer t(r, "end-check");
        r.decisions.push_back({"endomorphism", is_endomorphism(A, T, N)});
        record_precisions(r, A, T);
    } else if (cmd == "aut-check") {
        const RatMatrix& T = need_T(in, cmd);
        Timer t(r, "aut-check");
        r.decisions.push_back({"automorphism", is_automorphism(A, T, N)});
        record_precisions(r, A, T);
    } else if (cmd == "ergodic") {
        const RatMatrix& T = need_T(in, cmd);
        Timer t(r, "ergodic");
        r.decisions.push_back({"ergodic", is_ergodic(A, T)});
    } else if (cmd == "oracle") {
        const RatMatrix& T = need_T(in, cmd);
        Timer t(r, "oracle");
        r.decisions.push_back({"oracle", bounded_oracle(A, T, o.oracle_depth[0], o.oracle_depth[1])});
    } else if (cmd == "odometer") {
        Timer t(r, "odometer");
        r.linrep = linear_rep_group_description(A);
        if (in.T) {
            Decision d;
            if (!is_integral(*in.T)) {
                d.verdict = Verdict::No;
                d.cert.kind = "linear representation";
                d.cert.failing_condition = "T is not an integer matrix";
            } else {
                d = in_linear_rep_group(A, to_integer(*in.T), N);
            }
            r.decisions.push_back({"odometer", d});
        }
    } else if (cmd == "periodic") {
        add_dynamics(r, A, need_T(in, cmd), o, true);
    } else if (cmd == "analyze" && in.T) {
        const RatMatrix& T = *in.T;
        {
            Timer t(r, "decisions");
            r.decisions.push_back({"endomorphism", is_endomorphism(A, T, N)});
            r.decisions.push_back({"automorphism", is_automorphism(A, T, N)});
            r.decisions.push_back({"ergodic", is_ergodic(A, T)});
            if (is_integral(T)) r.decisions.push_back({"odometer", in_linear_rep_group(A, to_integer(T), N)});
            record_precisions(r, A, T);
        }
        try {
            add_dynamics(r, A, T, o, true);
        } catch (const PrecisionError&) {
            throw;
        } catch (const MathError& e) {
            r.notes.push_back(std::string("dynamics skipped: ") + e.what());
        }
    }
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gaend: exact analysis of End(G_A), solenoid dynamics and odometers"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    std::string k_list, depth;
    app.add_option("--matrix", o.matrix, "integer matrix A as JSON, or I")->envname("GA_MATRIX");
    app.add_option("--transform", o.transform, "transform T as JSON (entries int, string or [num, den]), or I")
        ->envname("GA_TRANSFORM");
    app.add_option("--xi-poly", o.xi_poly, "coefficients of xi in powers of lambda, lowest first")->envname("GA_XI_POLY");
    auto* xp = app.add_option("--xi-power", o.xi_power, "xi is multiplied by lambda^power")->envname("GA_XI_POWER");
    app.add_option("--k", k_list, "periods, comma separated")->envname("GA_K");
    app.add_option("--precision-exponent", o.precision_exponent, "p-adic precision N override")
        ->envname("GA_PRECISION_EXPONENT");
    app.add_option("--precision-bits", o.precision_bits, "archimedean precision in bits")
        ->envname("GA_PRECISION_BITS")
        ->check(CLI::Range(16L, 1L << 20));
    app.add_option("--oracle-depth", depth, "bounded oracle depth m,k")->envname("GA_ORACLE_DEPTH");
    app.add_flag("--assert-monogenic", o.assert_monogenic, "treat Z[lambda] as the maximal order")
        ->envname("GA_ASSERT_MONOGENIC");
    app.add_option("--max-k", o.max_k, "largest k for the empirical growth rate")
        ->envname("GA_MAX_K")
        ->check(CLI::Range(0, 64));
    app.add_option("--input", o.input, "JSON input file")->envname("GA_INPUT");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"analyze", "invariants, descriptions, all decisions and dynamics"},
        {"end-check", "decide T in End(G_A)"},
        {"aut-check", "decide T in Aut(G_A)"},
        {"ergodic", "decide ergodicity of the dual of T"},
        {"periodic", "periodic point counts |F_k| and entropy"},
        {"odometer", "linear representation group of the odometer"},
        {"describe", "structural descriptions of End(G_A) and N(X_A)"},
        {"oracle", "bounded search for A^k T A^-m integral"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        o.xi_power_set = xp->count() > 0 || std::getenv("GA_XI_POWER");
        auto ints = [](const std::string& s, const char* what) {
            std::vector<long> v;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t pos = 0;
                long x;
                try {
                    x = std::stol(item, &pos);
                } catch (const std::exception&) {
                    throw MathError(std::string(what) + ": '" + item + "' is not an integer");
                }
                if (pos != item.size()) throw MathError(std::string(what) + ": '" + item + "' is not an integer");
                v.push_back(x);
            }
            return v;
        };
        if (!k_list.empty())
            for (long x : ints(k_list, "--k")) {
                if (x < 1 || x > 4096) throw MathError("--k: periods must lie in [1, 4096]");
                o.k.push_back(static_cast<unsigned>(x));
            }
        if (!depth.empty()) {
            auto v = ints(depth, "--oracle-depth");
            if (v.size() != 2 || v[0] < 0 || v[1] < 0 || v[0] > 64 || v[1] > 256)
                throw MathError("--oracle-depth expects m,k with 0 <= m <= 64, 0 <= k <= 256");
            o.oracle_depth = {static_cast<int>(v[0]), static_cast<int>(v[1])};
        }
        if (!o.input.empty()) merge_input_file(o);

        AnalysisReport r = run(cmd, o);
        std::cout << to_json(r).dump(2) << "\n";
        if (isatty(STDERR_FILENO)) std::cerr << summary_text(r);
        return any_inconclusive(r) ? 3 : 0;
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 4;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
