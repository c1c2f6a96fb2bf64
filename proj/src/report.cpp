#include "gaend/report.hpp"

#include <cctype>
#include <sstream>

namespace gaend {

namespace {

const Integer kSafe("9007199254740991");

[[noreturn]] void bad(const std::string& what) { throw MathError("malformed input: " + what); }

bool digits_only(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string str_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
    return v.get<std::string>();
}

template <class T>
std::optional<T> opt(const Json& j, const char* key, T (*conv)(const Json&))
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return conv(j.at(key));
}

Verdict verdict_from(const std::string& s)
{
    if (s == "YES") return Verdict::Yes;
    if (s == "NO") return Verdict::No;
    if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
    bad("unknown verdict '" + s + "'");
}

template <class T>
Json null_or(const std::optional<T>& v)
{
    return v ? to_json(*v) : Json(nullptr);
}

Json int_list(const std::vector<Integer>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

std::vector<Integer> int_list_from(const Json& j)
{
    if (!j.is_array()) bad("expected an array of integers");
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

unsigned uint_from(const Json& j)
{
    Integer z = integer_from_json(j);
    if (z < 0 || !z.fits_ulong_p()) bad("expected a small non-negative integer");
    return static_cast<unsigned>(z.get_ui());
}

int int_from(const Json& j)
{
    Integer z = integer_from_json(j);
    if (!z.fits_sint_p()) bad("integer out of range");
    return static_cast<int>(z.get_si());
}

double double_from(const Json& j)
{
    if (!j.is_number()) bad("expected a number");
    return j.get<double>();
}

template <class T>
Matrix<T> matrix_from(const Json& j, std::size_t n, T (*entry)(const Json&))
{
    if (j.is_string()) {
        if (j.get<std::string>() != "I") bad("matrix must be a JSON array or \"I\"");
        if (n == 0) bad("\"I\" needs a dimension from the other matrix");
        return Matrix<T>::identity(n);
    }
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty arrays");
    const std::size_t cols = j[0].size();
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c]);
    }
    return m;
}

Json desc_poly_list(const std::vector<RatPoly>& v)
{
    Json a = Json::array();
    for (const auto& f : v) a.push_back(to_json(f));
    return a;
}

}  // namespace

Json to_json(const Integer& z)
{
    if (abs(z) <= kSafe) return Json(static_cast<long long>(z.get_si()));
    return Json(z.get_str());
}

Json to_json(const Rational& q)
{
    if (q.get_den() == 1) return to_json(q.get_num());
    return Json::array({to_json(q.get_num()), to_json(q.get_den())});
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!digits_only(s)) bad("'" + s + "' is not an integer");
        if (s[0] == '+') s.erase(0, 1);
        return Integer(s);
    }
    if (j.is_number_float()) bad("non-integer number " + j.dump());
    bad("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) bad("rational must be [num, den]");
        Integer n = integer_from_json(j[0]), d = integer_from_json(j[1]);
        if (d == 0) bad("zero denominator");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    return Rational(integer_from_json(j));
}

Json to_json(const IntMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(int_list(m.row(i)));
    return a;
}

Json to_json(const RatMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(to_json(m(i, c)));
        a.push_back(r);
    }
    return a;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t n) { return matrix_from<Integer>(j, n, integer_from_json); }
RatMatrix rat_matrix_from_json(const Json& j, std::size_t n) { return matrix_from<Rational>(j, n, rational_from_json); }

Json to_json(const IntPoly& f) { return int_list(f.coeffs()); }

Json to_json(const RatPoly& f)
{
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return a;
}

IntPoly int_poly_from_json(const Json& j) { return IntPoly(int_list_from(j)); }

RatPoly rat_poly_from_json(const Json& j)
{
    if (!j.is_array()) bad("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return RatPoly(std::move(c));
}

Json to_json(const LocalDecision& d)
{
    Json j;
    j["p"] = to_json(d.p);
    j["N"] = d.N;
    j["t"] = d.t;
    j["verdict"] = verdict_name(d.verdict);
    j["failed"] = d.failed;
    return j;
}

LocalDecision local_decision_from_json(const Json& j)
{
    LocalDecision d;
    d.p = integer_from_json(field(j, "p"));
    d.N = uint_from(field(j, "N"));
    d.t = int_from(field(j, "t"));
    d.verdict = verdict_from(str_field(j, "verdict"));
    d.failed = str_field(j, "failed");
    return d;
}

Json to_json(const Certificate& c)
{
    Json j;
    j["kind"] = c.kind;
    j["failing_prime"] = null_or(c.failing_prime);
    j["failing_condition"] = c.failing_condition;
    j["transcripts"] = Json::array();
    for (const auto& t : c.transcripts) j["transcripts"].push_back(to_json(t));
    j["witnesses"] = Json::array();
    for (const auto& w : c.witnesses) j["witnesses"].push_back(Json::array({w.m, w.k}));
    j["failing_m"] = c.failing_m ? Json(*c.failing_m) : Json(nullptr);
    j["oracle"] = c.oracle;
    j["note"] = c.note;
    return j;
}

Certificate certificate_from_json(const Json& j)
{
    Certificate c;
    c.kind = str_field(j, "kind");
    c.failing_prime = opt<Integer>(j, "failing_prime", integer_from_json);
    c.failing_condition = str_field(j, "failing_condition");
    for (const auto& t : field(j, "transcripts")) c.transcripts.push_back(local_decision_from_json(t));
    for (const auto& w : field(j, "witnesses")) {
        if (!w.is_array() || w.size() != 2) bad("witness must be [m, k]");
        c.witnesses.push_back({int_from(w[0]), int_from(w[1])});
    }
    c.failing_m = opt<int>(j, "failing_m", int_from);
    c.oracle = str_field(j, "oracle");
    c.note = str_field(j, "note");
    return c;
}

Json to_json(const Decision& d)
{
    Json j;
    j["verdict"] = verdict_name(d.verdict);
    j["certificate"] = to_json(d.cert);
    return j;
}

Decision decision_from_json(const Json& j)
{
    Decision d;
    d.verdict = verdict_from(str_field(j, "verdict"));
    d.cert = certificate_from_json(field(j, "certificate"));
    return d;
}

Json to_json(const EndDescription& e)
{
    Json j;
    j["tag"] = end_tag_name(e.tag);
    j["statement"] = e.statement;
    j["lambda1"] = to_json(e.lambda1);
    j["lambda2"] = to_json(e.lambda2);
    j["v"] = to_json(e.v);
    j["field_poly"] = to_json(e.field_poly);
    j["omega"] = to_json(e.omega);
    j["alpha"] = to_json(e.alpha);
    j["generators"] = desc_poly_list(e.generators);
    j["reason"] = e.reason;
    return j;
}

EndDescription end_description_from_json(const Json& j)
{
    EndDescription e;
    auto tag = end_tag_from_name(str_field(j, "tag"));
    if (!tag) bad("unknown End tag");
    e.tag = *tag;
    e.statement = str_field(j, "statement");
    e.lambda1 = integer_from_json(field(j, "lambda1"));
    e.lambda2 = integer_from_json(field(j, "lambda2"));
    e.v = integer_from_json(field(j, "v"));
    e.field_poly = int_poly_from_json(field(j, "field_poly"));
    e.omega = rat_poly_from_json(field(j, "omega"));
    e.alpha = integer_from_json(field(j, "alpha"));
    for (const auto& g : field(j, "generators")) e.generators.push_back(rat_poly_from_json(g));
    e.reason = str_field(j, "reason");
    return e;
}

Json to_json(const LinRepDescription& l)
{
    Json j;
    j["tag"] = linrep_tag_name(l.tag);
    j["diagonalizer_det"] = to_json(l.diagonalizer_det);
    j["field_poly"] = to_json(l.field_poly);
    j["finite"] = l.finite;
    j["statement"] = l.statement;
    j["reason"] = l.reason;
    return j;
}

LinRepDescription linrep_from_json(const Json& j)
{
    LinRepDescription l;
    auto tag = linrep_tag_from_name(str_field(j, "tag"));
    if (!tag) bad("unknown linear representation tag");
    l.tag = *tag;
    l.diagonalizer_det = integer_from_json(field(j, "diagonalizer_det"));
    l.field_poly = int_poly_from_json(field(j, "field_poly"));
    const Json& f = field(j, "finite");
    if (!f.is_boolean()) bad("'finite' must be boolean");
    l.finite = f.get<bool>();
    l.statement = str_field(j, "statement");
    l.reason = str_field(j, "reason");
    return l;
}

Json parse_json_exact(const std::string& text)
{
    std::string out;
    out.reserve(text.size() + 16);
    bool in_str = false;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (in_str) {
            out += c;
            if (c == '\\' && i + 1 < text.size()) out += text[++i];
            else if (c == '"') in_str = false;
            ++i;
            continue;
        }
        if (c == '"') {
            in_str = true;
            out += c;
            ++i;
            continue;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            const std::size_t int_end = j;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.' ||
                                       text[j] == 'e' || text[j] == 'E' || text[j] == '+' || text[j] == '-'))
                ++j;
            std::string tok = text.substr(i, j - i);
            if (j == int_end && int_end - i - (c == '-' ? 1 : 0) > 15) out += '"' + tok + '"';
            else out += tok;
            i = j;
            continue;
        }
        out += c;
        ++i;
    }
    try {
        return Json::parse(out);
    } catch (const Json::parse_error& e) {
        bad(std::string("JSON syntax: ") + e.what());
    }
}

InvariantsBlock invariants_block(const GaInvariants& inv)
{
    return InvariantsBlock{inv.det, inv.h, inv.P, inv.P_prime, inv.t, inv.irreducible};
}

Json to_json(const AnalysisReport& r)
{
    Json j;
    j["command"] = r.command;
    Json in;
    in["matrix"] = to_json(r.A);
    in["transform"] = r.T ? to_json(*r.T) : Json(nullptr);
    in["k"] = r.k;
    j["input"] = in;

    if (r.invariants) {
        const auto& b = *r.invariants;
        Json iv;
        iv["det"] = to_json(b.det);
        iv["char_poly"] = to_json(b.h);
        iv["P"] = int_list(b.P);
        iv["P_prime"] = int_list(b.P_prime);
        Json t = Json::object();
        for (const auto& [p, tp] : b.t) t[p.get_str()] = tp;
        iv["t"] = t;
        iv["irreducible"] = b.irreducible;
        j["invariants"] = iv;
    } else {
        j["invariants"] = nullptr;
    }

    Json cl;
    cl["end"] = null_or(r.end_description);
    cl["linear_rep"] = null_or(r.linrep);
    j["classification"] = cl;

    Json dec = Json::array();
    for (const auto& d : r.decisions) {
        Json e;
        e["name"] = d.name;
        e["decision"] = to_json(d.decision);
        dec.push_back(e);
    }
    j["decisions"] = dec;

    if (r.dynamics) {
        const auto& d = *r.dynamics;
        Json dy;
        dy["xi"] = null_or(d.xi);
        Json per = Json::array();
        for (const auto& pc : d.periodic) {
            Json e;
            e["k"] = pc.k;
            e["count"] = to_json(pc.count);
            per.push_back(e);
        }
        dy["periodic_points"] = per;
        dy["entropy"] = d.entropy ? Json(*d.entropy) : Json(nullptr);
        dy["entropy_decimal"] = d.entropy_decimal;
        dy["growth"] = d.growth;
        j["dynamics"] = dy;
    } else {
        j["dynamics"] = nullptr;
    }
    j["notes"] = r.notes;

    Json dg;
    dg["padic_precision_override"] = r.diagnostics.padic_precision ? Json(*r.diagnostics.padic_precision) : Json(nullptr);
    dg["padic_precision_used"] = Json::object();
    for (const auto& [p, N] : r.diagnostics.padic_precision_used) dg["padic_precision_used"][p] = N;
    dg["archimedean_bits"] = r.diagnostics.archimedean_bits;
    dg["oracle_depth"] = Json::array({r.diagnostics.oracle_depth_m, r.diagnostics.oracle_depth_k});
    dg["timings_ms"] = Json::object();
    for (const auto& [k, v] : r.diagnostics.timings_ms) dg["timings_ms"][k] = v;
    j["diagnostics"] = dg;
    return j;
}

AnalysisReport report_from_json(const Json& j)
{
    AnalysisReport r;
    r.command = str_field(j, "command");
    const Json& in = field(j, "input");
    r.A = int_matrix_from_json(field(in, "matrix"));
    if (!field(in, "transform").is_null()) r.T = rat_matrix_from_json(in.at("transform"), r.A.rows());
    for (const auto& k : field(in, "k")) r.k.push_back(uint_from(k));

    const Json& iv = field(j, "invariants");
    if (!iv.is_null()) {
        InvariantsBlock b;
        b.det = integer_from_json(field(iv, "det"));
        b.h = int_poly_from_json(field(iv, "char_poly"));
        b.P = int_list_from(field(iv, "P"));
        b.P_prime = int_list_from(field(iv, "P_prime"));
        for (const auto& [p, tp] : field(iv, "t").items()) {
            if (!digits_only(p)) bad("t key must be a prime");
            b.t[Integer(p)] = int_from(tp);
        }
        const Json& irr = field(iv, "irreducible");
        if (!irr.is_boolean()) bad("'irreducible' must be boolean");
        b.irreducible = irr.get<bool>();
        r.invariants = b;
    }

    const Json& cl = field(j, "classification");
    r.end_description = opt<EndDescription>(cl, "end", end_description_from_json);
    r.linrep = opt<LinRepDescription>(cl, "linear_rep", linrep_from_json);

    for (const auto& e : field(j, "decisions"))
        r.decisions.push_back({str_field(e, "name"), decision_from_json(field(e, "decision"))});

    const Json& dy = field(j, "dynamics");
    if (!dy.is_null()) {
        DynamicsBlock d;
        d.xi = opt<RatPoly>(dy, "xi", rat_poly_from_json);
        for (const auto& e : field(dy, "periodic_points"))
            d.periodic.push_back({uint_from(field(e, "k")), integer_from_json(field(e, "count"))});
        d.entropy = opt<double>(dy, "entropy", double_from);
        d.entropy_decimal = str_field(dy, "entropy_decimal");
        for (const auto& g : field(dy, "growth")) d.growth.push_back(double_from(g));
        r.dynamics = d;
    }
    for (const auto& n : field(j, "notes")) {
        if (!n.is_string()) bad("notes must be strings");
        r.notes.push_back(n.get<std::string>());
    }

    const Json& dg = field(j, "diagnostics");
    r.diagnostics.padic_precision = opt<unsigned>(dg, "padic_precision_override", uint_from);
    for (const auto& [p, N] : field(dg, "padic_precision_used").items()) r.diagnostics.padic_precision_used[p] = uint_from(N);
    r.diagnostics.archimedean_bits = int_from(field(dg, "archimedean_bits"));
    const Json& od = field(dg, "oracle_depth");
    if (!od.is_array() || od.size() != 2) bad("oracle_depth must be [m, k]");
    r.diagnostics.oracle_depth_m = int_from(od[0]);
    r.diagnostics.oracle_depth_k = int_from(od[1]);
    for (const auto& [k, v] : field(dg, "timings_ms").items()) r.diagnostics.timings_ms[k] = double_from(v);
    return r;
}

std::string summary_text(const AnalysisReport& r)
{
    std::ostringstream os;
    os << r.command << ": A = " << r.A.to_string() << "\n";
    if (r.invariants) {
        os << "  det " << r.invariants->det << ", P = {";
        for (std::size_t i = 0; i < r.invariants->P.size(); ++i) os << (i ? ", " : "") << r.invariants->P[i];
        os << "}, P' = {";
        for (std::size_t i = 0; i < r.invariants->P_prime.size(); ++i) os << (i ? ", " : "") << r.invariants->P_prime[i];
        os << "}\n";
    }
    if (r.end_description) os << "  End: " << end_tag_name(r.end_description->tag) << "\n";
    if (r.linrep) os << "  N(X): " << linrep_tag_name(r.linrep->tag) << "\n";
    for (const auto& d : r.decisions) {
        os << "  " << d.name << ": " << verdict_name(d.decision.verdict);
        if (!d.decision.cert.failing_condition.empty()) os << " (" << d.decision.cert.failing_condition << ")";
        os << "\n";
    }
    if (r.dynamics) {
        for (const auto& pc : r.dynamics->periodic) os << "  |F_" << pc.k << "| = " << pc.count << "\n";
        if (r.dynamics->entropy) os << "  entropy = " << r.dynamics->entropy_decimal << "\n";
    }
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace gaend
