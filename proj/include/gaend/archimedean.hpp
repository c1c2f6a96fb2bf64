#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "gaend/numberfield.hpp"

namespace gaend {

/// Raised when the requested precision could not be certified.
class PrecisionError : public MathError {
public:
    PrecisionError(const std::string& what, long suggested_bits)
        : MathError(what), suggested_(suggested_bits) {}
    long suggested_bits() const { return suggested_; }

private:
    long suggested_;
};

/// Owning MPFR value with an explicit precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from(const Integer& z, mpfr_prec_t prec);
    static Real from(const Rational& q, mpfr_prec_t prec);
    static Real from(double d, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;
    int sign() const { return mpfr_sgn(v_); }

    Real log() const;
    Real abs() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }

private:
    mpfr_t v_;
};

struct PlaceValue {
    bool real = true;
    Real root_re;
    Real root_im;
    /// |sigma(x)| at a real place, |sigma(x)|^2 for a complex pair.
    Real value;
};

/// One normalized absolute value per infinite place; the product agrees with
/// |N(x)| to relative error 2^(1 - precision_bits) or PrecisionError is thrown.
std::vector<PlaceValue> archimedean_abs(const NfElement& x, long precision_bits = 128);

/// Complex roots of a squarefree integer polynomial, real roots first, then
/// one representative (Im > 0) per conjugate pair.
std::vector<std::pair<Real, Real>> place_roots(const IntPoly& h, long precision_bits);

}  // namespace gaend
