#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaend/factor.hpp"
#include "gaend/matrix.hpp"
#include "gaend/poly.hpp"

namespace gaend {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// K = Q[x]/(h) for a monic irreducible h.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Checks monicity and irreducibility. With assert_monogenic the caller
    /// certifies O_K = Z[lambda].
    static FieldPtr create(const IntPoly& h, bool assert_monogenic = false);

    const IntPoly& poly() const { return h_; }
    int degree() const { return static_cast<int>(h_.degree()); }
    const Integer& disc() const { return disc_; }
    /// [O_K : Z[lambda]] when known: exact for n = 2; 1 for squarefree
    /// discriminants, asserted monogenicity, or when Dedekind's criterion holds
    /// at every p with p^2 | disc.
    const std::optional<Integer>& index_known() const { return index_; }
    bool monogenic() const { return index_ && *index_ == 1; }
    bool monogenic_asserted() const { return asserted_; }
    /// Dedekind's criterion: true when p does not divide [O_K : Z[lambda]].
    bool p_maximal(const Integer& p) const;

    /// Matrix of multiplication by lambda on the power basis.
    const IntMatrix& lambda_matrix() const { return lambda_matrix_; }

    int real_places() const { return r1_; }
    int complex_places() const { return (degree() - r1_) / 2; }

private:
    NumberField() = default;
    IntPoly h_;
    Integer disc_;
    std::optional<Integer> index_;
    bool asserted_ = false;
    IntMatrix lambda_matrix_;
    int r1_ = 0;
};

/// Element of K in power-basis coordinates.
class NfElement {
public:
    NfElement() = default;
    NfElement(FieldPtr k, RatVector coords);
    static NfElement from_rational(FieldPtr k, const Rational& q);
    static NfElement lambda(FieldPtr k);
    static NfElement from_poly(FieldPtr k, const RatPoly& q);

    const FieldPtr& field() const { return k_; }
    const RatVector& coords() const { return c_; }
    RatPoly as_poly() const;
    bool is_zero() const;
    bool is_rational() const;

    NfElement& operator+=(const NfElement& o);
    NfElement& operator-=(const NfElement& o);
    friend NfElement operator+(NfElement a, const NfElement& b) { return a += b; }
    friend NfElement operator-(NfElement a, const NfElement& b) { return a -= b; }
    friend NfElement operator-(const NfElement& a);
    friend NfElement operator*(const NfElement& a, const NfElement& b);
    friend NfElement operator*(const NfElement& a, const Rational& q);
    friend bool operator==(const NfElement& a, const NfElement& b);
    friend bool operator!=(const NfElement& a, const NfElement& b) { return !(a == b); }

    /// Throws on zero.
    NfElement inverse() const;
    NfElement pow(long e) const;

    /// Column j holds the coordinates of x * lambda^j.
    RatMatrix mult_matrix() const;
    Rational norm() const;
    Rational trace() const;
    /// Characteristic polynomial of multiplication by x (monic, rational).
    RatPoly char_poly() const;
    bool is_algebraic_integer() const;
    /// lcm of coordinate denominators.
    Integer denominator() const;

    std::string to_string() const;

private:
    FieldPtr k_;
    RatVector c_;
};

struct NormTrace {
    Rational norm;
    Rational trace;
};
NormTrace nf_norm_trace(const NfElement& x);

struct FieldIndex {
    Integer m;   // [O_K : Z[lambda]]
    Integer l1;  // rad(l1) | det
    Integer l2;  // (l2, det) = 1
    Integer relative_to;

    bool operator==(const FieldIndex&) const = default;
};

/// Throws MathError("index undetermined") when no certificate is available.
FieldIndex field_index(const NumberField& K, const Integer& det);

bool is_root_of_unity(const NfElement& x);

// ---------------------------------------------------------------- ideals

struct PrimeIdealData {
    Integer p;
    IntPoly gen_poly;  // monic, coefficients in [0, p)
    int e = 0;
    int f = 0;
    Integer norm;
};

/// Dedekind-Kummer; throws "Dedekind–Kummer inapplicable" when p may divide
/// the index.
std::vector<PrimeIdealData> split_prime(const NumberField& K, const Integer& p);

/// Fractional ideal num/den where num is a full-rank Z[lambda]-submodule of
/// Z[lambda] in canonical HNF.
class FracIdeal {
public:
    FracIdeal() = default;
    static FracIdeal unit(FieldPtr k);
    static FracIdeal principal(const NfElement& x);
    static FracIdeal prime(FieldPtr k, const PrimeIdealData& P);
    static FracIdeal from_generators(FieldPtr k, const IntMatrix& gens, const Integer& den);

    const FieldPtr& field() const { return k_; }
    const IntMatrix& num() const { return num_; }
    const Integer& den() const { return den_; }

    Rational norm() const;
    bool contains(const NfElement& x) const;
    bool is_integral() const;
    /// O_K-module check: lambda * num stays inside num.
    bool is_module() const;

    friend FracIdeal operator*(const FracIdeal& a, const FracIdeal& b);
    friend bool operator==(const FracIdeal& a, const FracIdeal& b);
    friend bool operator!=(const FracIdeal& a, const FracIdeal& b) { return !(a == b); }

    /// Requires a maximal order locally at the primes involved.
    FracIdeal inverse() const;
    FracIdeal pow(long k) const;

    std::string to_string() const;

private:
    void canonicalize();
    FieldPtr k_;
    IntMatrix num_;
    Integer den_ = 1;
};

/// Exponent of P in (x). x nonzero.
int valuation(const NfElement& x, const PrimeIdealData& P);
/// Exponent of P in a fractional ideal.
int valuation(const FracIdeal& I, const PrimeIdealData& P);

}  // namespace gaend
