#include "gaend/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace gaend {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from(const Integer& z, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from(const Rational& q, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from(double d, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const
{
    std::unique_ptr<char[]> buf(new char[digits + 32]);
    mpfr_snprintf(buf.get(), digits + 32, "%.*Rg", digits, v_);
    return buf.get();
}

Real Real::log() const
{
    Real r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const
{
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

#define GAEND_REAL_BINOP(op, fn)                                   \
    Real operator op(const Real& a, const Real& b)                 \
    {                                                              \
        Real r(std::max(a.precision(), b.precision()));            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
        return r;                                                  \
    }
GAEND_REAL_BINOP(+, mpfr_add)
GAEND_REAL_BINOP(-, mpfr_sub)
GAEND_REAL_BINOP(*, mpfr_mul)
GAEND_REAL_BINOP(/, mpfr_div)
#undef GAEND_REAL_BINOP

namespace {

struct Cx {
    Real re, im;
};

Cx csub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx cmul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }

Cx cdiv(const Cx& a, const Cx& b)
{
    Real d = norm2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

template <class T>
Cx horner(const std::vector<T>& c, const Cx& z, mpfr_prec_t prec)
{
    Cx r{Real(prec), Real(prec)};
    for (std::size_t i = c.size(); i-- > 0;) {
        r = cmul(r, z);
        r.re = r.re + Real::from(c[i], prec);
    }
    return r;
}

// Durand-Kerner with a Newton polish.
std::vector<Cx> all_roots(const IntPoly& h, mpfr_prec_t prec)
{
    const std::size_t n = h.degree();
    std::vector<Cx> z;
    Integer bound = 0;
    for (const auto& c : h.coeffs()) bound = std::max(bound, Integer(abs(c)));
    Real R = Real::from(Integer(bound + 1), prec) / Real::from(Integer(abs(h.lead())), prec);
    mpfr_min(R.get(), R.get(), Real::from(1e6, prec).get(), MPFR_RNDN);
    for (std::size_t k = 0; k < n; ++k) {
        double a = 0.4 + 2 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        z.push_back({R * Real::from(0.9 * std::cos(a), prec), R * Real::from(0.9 * std::sin(a), prec)});
    }
    Real lead = Real::from(h.lead(), prec);
    Real tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(prec) + 8, MPFR_RNDN);
    for (int it = 0; it < 4000; ++it) {
        Real worst(prec);
        for (std::size_t k = 0; k < n; ++k) {
            Cx den{lead, Real(prec)};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) den = cmul(den, csub(z[k], z[j]));
            Cx step = cdiv(horner(h.coeffs(), z[k], prec), den);
            z[k] = csub(z[k], step);
            Real s = norm2(step), m = norm2(z[k]);
            Real one = Real::from(1.0, prec);
            if (m < one) m = one;
            Real rel = s / m;
            if (worst < rel) worst = rel;
        }
        if (worst < tol * tol) break;
    }
    auto dc = h.derivative().coeffs();
    for (auto& r : z)
        for (int i = 0; i < 2; ++i) r = csub(r, cdiv(horner(h.coeffs(), r, prec), horner(dc, r, prec)));
    return z;
}

std::vector<Cx> places(const IntPoly& h, mpfr_prec_t prec)
{
    const int r1 = count_real_roots(h);
    auto z = all_roots(h, prec);
    std::sort(z.begin(), z.end(), [](const Cx& a, const Cx& b) { return a.im.abs() < b.im.abs(); });
    std::vector<Cx> out;
    for (int i = 0; i < r1; ++i) {
        z[i].im = Real(prec);
        out.push_back(z[i]);
    }
    std::vector<Cx> cpx;
    for (std::size_t i = r1; i < z.size(); ++i)
        if (z[i].im.sign() > 0) cpx.push_back(z[i]);
    std::sort(cpx.begin(), cpx.end(), [](const Cx& a, const Cx& b) { return a.re < b.re; });
    if (cpx.size() * 2 + r1 != z.size()) throw PrecisionError("root isolation failed", 2 * prec);
    std::sort(out.begin(), out.end(), [](const Cx& a, const Cx& b) { return a.re < b.re; });
    out.insert(out.end(), cpx.begin(), cpx.end());
    return out;
}

}  // namespace

std::vector<std::pair<Real, Real>> place_roots(const IntPoly& h, long precision_bits)
{
    std::vector<std::pair<Real, Real>> out;
    for (auto& c : places(h, precision_bits + 64)) out.emplace_back(c.re, c.im);
    return out;
}

std::vector<PlaceValue> archimedean_abs(const NfElement& x, long precision_bits)
{
    if (x.is_zero()) throw MathError("absolute values of zero");
    if (precision_bits < 16) precision_bits = 16;
    const IntPoly& h = x.field()->poly();
    Rational nm = abs(x.norm());
    mpfr_prec_t wp = precision_bits + 64;
    for (int attempt = 0; attempt < 4; ++attempt, wp *= 2) {
        std::vector<PlaceValue> out;
        Real prod = Real::from(1.0, wp);
        for (auto& z : places(h, wp)) {
            PlaceValue v;
            v.real = z.im.sign() == 0;
            Cx e = horner(x.coords(), z, wp);
            v.value = v.real ? e.re.abs() : norm2(e);
            v.root_re = z.re;
            v.root_im = z.im;
            prod = prod * v.value;
            out.push_back(std::move(v));
        }
        Real exact = Real::from(nm, wp);
        Real err = ((prod - exact) / exact).abs();
        Real tol(wp);
        mpfr_set_ui_2exp(tol.get(), 1, 1 - precision_bits, MPFR_RNDN);
        if (err < tol) return out;
    }
    throw PrecisionError("archimedean values not certified at " + std::to_string(precision_bits) +
                             " bits; retry with at least " + std::to_string(2 * precision_bits) + " bits",
                         2 * precision_bits);
}

}  // namespace gaend
