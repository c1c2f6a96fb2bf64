#pragma once

#include <string>
#include <vector>

#include "gaend/matrix.hpp"

namespace gaend {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has an empty coefficient vector.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }

    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
    static Poly monomial(const T& a, std::size_t k)
    {
        std::vector<T> c(k + 1);
        c[k] = a;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lead() const { return c_.back(); }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    void set_coeff(std::size_t i, const T& a)
    {
        if (i >= c_.size()) c_.resize(i + 1);
        c_[i] = a;
        trim();
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& a)
    {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    T eval(const T& x) const
    {
        T r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<unsigned long>(i));
        return Poly(std::move(r));
    }

    /// Multiply by x^k.
    Poly shift(std::size_t k) const
    {
        if (is_zero()) return Poly();
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r));
    }

    std::string to_string() const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

extern template class Poly<Integer>;
extern template class Poly<Rational>;

RatPoly to_rational(const IntPoly& f);

/// Integer multiple of f scaled to a primitive polynomial with positive lead.
IntPoly primitive_part(const RatPoly& f);
IntPoly primitive_part(const IntPoly& f);
Integer content(const IntPoly& f);

/// Division over Q; throws on a zero divisor.
void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic

/// Exact division over Z; throws MathError when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

IntPoly pow(const IntPoly& f, unsigned long e);

// ---- polynomials with coefficients in Z/m (entries kept in [0, m)) ----

IntPoly reduce_mod(const IntPoly& f, const Integer& m);
IntPoly add_mod(const IntPoly& a, const IntPoly& b, const Integer& m);
IntPoly sub_mod(const IntPoly& a, const IntPoly& b, const Integer& m);
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m);
/// Division by b whose leading coefficient is a unit mod m.
void divrem_mod(const IntPoly& a, const IntPoly& b, const Integer& m, IntPoly& q, IntPoly& r);
IntPoly rem_mod(const IntPoly& a, const IntPoly& b, const Integer& m);
IntPoly monic_mod(const IntPoly& f, const Integer& m);
/// base^e mod (f, m).
IntPoly powmod(const IntPoly& base, const Integer& e, const IntPoly& f, const Integer& m);
/// Monic gcd over F_p.
IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, const Integer& p);
/// g = s a + t b over F_p with g monic.
IntPoly xgcd_mod_p(const IntPoly& a, const IntPoly& b, const Integer& p, IntPoly& s, IntPoly& t);

// ---- matrix-related ----

/// Faddeev-LeVerrier; monic of degree n.
IntPoly char_poly(const IntMatrix& A);
RatPoly char_poly(const RatMatrix& A);

/// q(A) by Horner.
RatMatrix eval_matrix(const RatPoly& q, const RatMatrix& A);
IntMatrix eval_matrix(const IntPoly& q, const IntMatrix& A);

/// Resultant via the Sylvester determinant.
Integer resultant(const IntPoly& a, const IntPoly& b);
Integer discriminant(const IntPoly& f);

/// m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long m);
unsigned long euler_phi(unsigned long m);

/// Number of distinct real roots (Sturm). f nonzero.
int count_real_roots(const IntPoly& f);

}  // namespace gaend
