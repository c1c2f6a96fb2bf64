#include "gaend/odometer.hpp"

namespace gaend {

const char* linrep_tag_name(LinRepTag t)
{
    switch (t) {
    case LinRepTag::FullGL: return "FullGL";
    case LinRepTag::KleinFour: return "KleinFour";
    case LinRepTag::PlusMinusIdentity: return "PlusMinusIdentity";
    case LinRepTag::LowerTriangularGL2: return "LowerTriangularGL2";
    case LinRepTag::CentralizerInGL: return "CentralizerInGL";
    default: return "MembershipOnly";
    }
}

std::optional<LinRepTag> linrep_tag_from_name(const std::string& s)
{
    for (int i = 0; i <= static_cast<int>(LinRepTag::MembershipOnly); ++i)
        if (s == linrep_tag_name(static_cast<LinRepTag>(i))) return static_cast<LinRepTag>(i);
    return std::nullopt;
}

Decision in_linear_rep_group(const IntMatrix& A, const IntMatrix& T, unsigned precision)
{
    if (!T.square() || T.rows() != A.rows()) throw MathError("transform dimension does not match the matrix");
    Integer d = determinant(T);
    if (d != 1 && d != -1) {
        Decision r;
        r.verdict = Verdict::No;
        r.cert.kind = "unimodularity";
        r.cert.failing_condition = "det T = " + d.get_str();
        return r;
    }
    Decision r = is_endomorphism(A.transpose(), to_rational(T.transpose()), precision);
    r.cert.note = r.cert.note.empty() ? "decided for (A^t, T^t)" : "decided for (A^t, T^t); " + r.cert.note;
    return r;
}

namespace {

IntVector primitive(const RatVector& v)
{
    Integer d = common_denominator(v);
    IntVector w;
    Integer g = 0;
    for (const auto& a : v) {
        w.push_back(Rational(a * d).get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.back().get_mpz_t());
    }
    for (auto& a : w) a /= g;
    return w;
}

}  // namespace

LinRepDescription linear_rep_group_description(const IntMatrix& A)
{
    GaInvariants inv = invariants(A);
    LinRepDescription d;
    if (inv.P.empty() || inv.P_prime.empty()) {
        d.tag = LinRepTag::FullGL;
        d.statement = "N(X_A) = GL_n(Z)";
        return d;
    }
    if (inv.n == 2) {
        Classification2d c = classify2d(A);
        if (c.tag == Case2d::IrreducibleA) {
            d.tag = LinRepTag::CentralizerInGL;
            d.field_poly = inv.h;
            d.finite = count_real_roots(inv.h) == 0;
            d.statement = std::string("centralizer of A in GL_2(Z), embedded in O_K^x") + (d.finite ? "; finite" : "");
            return d;
        }
        if (c.tag == Case2d::CaseC) {
            d.tag = LinRepTag::LowerTriangularGL2;
            d.statement = "isomorphic to the lower-triangular matrices in GL_2(Z)";
            return d;
        }
        // Case (b): primitive eigenvectors of A^t.
        RatMatrix At = to_rational(A.transpose());
        IntMatrix M(2, 2);
        int j = 0;
        for (const auto& lam : {c.lambda1, c.lambda2}) {
            RatMatrix ker = kernel(At - RatMatrix::scalar(2, Rational(lam)));
            M.set_column(j++, primitive(ker.column(0)));
        }
        d.diagonalizer_det = abs(determinant(M));
        if (d.diagonalizer_det == 1 || d.diagonalizer_det == 2) {
            d.tag = LinRepTag::KleinFour;
            d.statement = "N(X_A) = Z/2 x Z/2";
        } else {
            d.tag = LinRepTag::PlusMinusIdentity;
            d.statement = "N(X_A) = {+-id}";
        }
        return d;
    }
    if (inv.irreducible && has_coprime_t(inv)) {
        d.tag = LinRepTag::CentralizerInGL;
        d.field_poly = inv.h;
        d.statement = "centralizer of A in GL_n(Z), embedded in O_K^x";
        return d;
    }
    d.tag = LinRepTag::MembershipOnly;
    d.reason = "generators out of scope; membership decidable";
    return d;
}

IntMatrix unit_to_matrix(const IntMatrix& A, const IntVector& unit_coords, bool assert_monogenic)
{
    GaInvariants inv = invariants(A);
    if (!inv.irreducible) throw MathError("unit_to_matrix requires an irreducible characteristic polynomial");
    if (unit_coords.empty() || unit_coords.size() > static_cast<std::size_t>(inv.n))
        throw MathError("unit coordinates must have between 1 and n entries");
    FieldPtr K = NumberField::create(inv.h, assert_monogenic);
    if (!K->monogenic()) throw MathError("unit_to_matrix requires a monogenic certificate (O_K = Z[lambda])");
    IntPoly q{std::vector<Integer>(unit_coords.begin(), unit_coords.end())};
    NfElement xi = NfElement::from_poly(K, to_rational(q));
    Rational nm = xi.norm();
    if (nm != 1 && nm != -1) throw MathError("not a unit: N(xi) = " + to_string(nm));
    return eval_matrix(q, A);
}

}  // namespace gaend
