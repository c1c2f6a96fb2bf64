#include "gaend/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "gaend/hnf.hpp"

namespace gaend {

namespace {

// Dedekind's criterion at p for monic h.
bool dedekind_maximal(const IntPoly& h, const Integer& p)
{
    auto fac = factor_mod_p(h, p);
    IntPoly g = IntPoly::constant(1), k = IntPoly::constant(1);
    for (auto& [gi, e] : fac) {
        if (gi.degree() == 0) continue;
        g = g * gi;
        for (int i = 1; i < e; ++i) k = k * gi;
    }
    IntPoly diff = h - g * k;
    std::vector<Integer> c;
    for (const auto& a : diff.coeffs()) {
        if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) throw MathError("Dedekind test: inconsistent factorization");
        c.push_back(a / p);
    }
    IntPoly F(std::move(c));
    IntPoly d = gcd_mod_p(gcd_mod_p(F, g, p), k, p);
    return d.degree() == 0;
}

RatVector reduce_coeffs(const IntPoly& h, const RatPoly& q)
{
    const std::size_t n = h.degree();
    std::vector<Rational> c(q.coeffs());
    for (std::size_t k = c.size(); k-- > n;) {
        Rational t = c[k];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) c[k - n + j] -= t * h.coeffs()[j];
    }
    c.resize(n);
    return c;
}

IntVector integral_coords(const NfElement& x)
{
    IntVector v;
    for (const auto& a : x.coords()) {
        if (a.get_den() != 1) throw MathError("element is not in Z[lambda]");
        v.push_back(a.get_num());
    }
    return v;
}

IntMatrix int_mult_matrix(const FieldPtr& k, const IntVector& a)
{
    RatVector rc(a.begin(), a.end());
    return to_integer(NfElement(k, rc).mult_matrix());
}

}  // namespace

// ---------------------------------------------------------------- field

FieldPtr NumberField::create(const IntPoly& h, bool assert_monogenic)
{
    if (h.degree() < 1) throw MathError("defining polynomial must have positive degree");
    if (h.lead() != 1) throw MathError("defining polynomial must be monic");
    if (!is_irreducible(h)) throw MathError("defining polynomial " + h.to_string() + " is reducible");
    std::shared_ptr<NumberField> k(new NumberField());
    k->h_ = h;
    const int n = static_cast<int>(h.degree());
    k->disc_ = n >= 2 ? discriminant(h) : Integer(1);
    k->asserted_ = assert_monogenic;
    k->lambda_matrix_ = IntMatrix(n, n);
    for (int j = 0; j + 1 < n; ++j) k->lambda_matrix_(j + 1, j) = 1;
    for (int i = 0; i < n; ++i) k->lambda_matrix_(i, n - 1) = -h.coeffs()[i];
    k->r1_ = count_real_roots(h);

    if (n == 1) {
        k->index_ = Integer(1);
    } else if (n == 2) {
        Integer m = 1, d = k->disc_ < 0 ? Integer(-1) : Integer(1);
        for (auto& [p, e] : factor_integer(k->disc_)) {
            m *= pow_int(p, e / 2);
            if (e % 2) d *= p;
        }
        k->index_ = nonneg_mod(d, 4) == 1 ? m : Integer(m / 2);
    } else if (assert_monogenic) {
        k->index_ = Integer(1);
    } else {
        bool ok = true;
        for (auto& [p, e] : factor_integer(k->disc_))
            if (e >= 2 && !dedekind_maximal(h, p)) {
                ok = false;
                break;
            }
        if (ok) k->index_ = Integer(1);
    }
    return k;
}

bool NumberField::p_maximal(const Integer& p) const
{
    if (index_) return !mpz_divisible_p(index_->get_mpz_t(), p.get_mpz_t());
    if (!mpz_divisible_p(disc_.get_mpz_t(), Integer(p * p).get_mpz_t())) return true;
    return dedekind_maximal(h_, p);
}

// ---------------------------------------------------------------- elements

NfElement::NfElement(FieldPtr k, RatVector coords) : k_(std::move(k)), c_(std::move(coords))
{
    if (!k_) throw MathError("element without a field");
    if (c_.size() != static_cast<std::size_t>(k_->degree())) throw MathError("coordinate length mismatch");
}

NfElement NfElement::from_rational(FieldPtr k, const Rational& q)
{
    RatVector c(k->degree());
    c[0] = q;
    return NfElement(std::move(k), std::move(c));
}

NfElement NfElement::lambda(FieldPtr k)
{
    if (k->degree() == 1) return from_rational(k, Rational(-k->poly().coeffs()[0]));
    RatVector c(k->degree());
    c[1] = 1;
    return NfElement(std::move(k), std::move(c));
}

NfElement NfElement::from_poly(FieldPtr k, const RatPoly& q)
{
    RatVector c = reduce_coeffs(k->poly(), q);
    return NfElement(std::move(k), std::move(c));
}

RatPoly NfElement::as_poly() const { return RatPoly(c_); }

bool NfElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a == 0; });
}

bool NfElement::is_rational() const
{
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& a) { return a == 0; });
}

NfElement& NfElement::operator+=(const NfElement& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NfElement& NfElement::operator-=(const NfElement& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

NfElement operator-(const NfElement& a)
{
    NfElement r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

NfElement operator*(const NfElement& a, const NfElement& b)
{
    return NfElement::from_poly(a.k_, a.as_poly() * b.as_poly());
}

NfElement operator*(const NfElement& a, const Rational& q)
{
    NfElement r = a;
    for (auto& x : r.c_) x *= q;
    return r;
}

bool operator==(const NfElement& a, const NfElement& b) { return a.c_ == b.c_; }

NfElement NfElement::inverse() const
{
    if (is_zero()) throw MathError("inverse of zero");
    RatVector e(c_.size());
    e[0] = 1;
    return NfElement(k_, solve(mult_matrix(), e));
}

NfElement NfElement::pow(long e) const
{
    NfElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    NfElement r = from_rational(k_, 1);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

RatMatrix NfElement::mult_matrix() const
{
    const std::size_t n = c_.size();
    RatMatrix m(n, n);
    RatMatrix L = to_rational(k_->lambda_matrix());
    RatVector col = c_;
    for (std::size_t j = 0; j < n; ++j) {
        m.set_column(j, col);
        col = L * col;
    }
    return m;
}

Rational NfElement::norm() const { return determinant(mult_matrix()); }
Rational NfElement::trace() const { return gaend::trace(mult_matrix()); }
RatPoly NfElement::char_poly() const { return gaend::char_poly(mult_matrix()); }

bool NfElement::is_algebraic_integer() const
{
    const RatPoly cp = char_poly();
    for (const auto& a : cp.coeffs())
        if (a.get_den() != 1) return false;
    return true;
}

Integer NfElement::denominator() const { return common_denominator(c_); }

std::string NfElement::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << gaend::to_string(c_[i]);
    os << ']';
    return os.str();
}

NormTrace nf_norm_trace(const NfElement& x) { return {x.norm(), x.trace()}; }

FieldIndex field_index(const NumberField& K, const Integer& det)
{
    if (!K.index_known()) throw MathError("index undetermined");
    FieldIndex r;
    r.m = *K.index_known();
    r.relative_to = det;
    r.l1 = 1;
    if (r.m > 1)
        for (auto& [p, e] : factor_integer(r.m))
            if (det != 0 && mpz_divisible_p(det.get_mpz_t(), p.get_mpz_t())) r.l1 *= pow_int(p, e);
    r.l2 = r.m / r.l1;
    return r;
}

bool is_root_of_unity(const NfElement& x)
{
    if (x.is_zero()) return false;
    if (!x.is_algebraic_integer()) return false;
    Rational nm = x.norm();
    if (nm != 1 && nm != -1) return false;
    RatPoly cp = x.char_poly();
    const unsigned long n = x.field()->degree();
    for (unsigned long m = 1; m <= 2 * n * n + 2; ++m) {
        unsigned long ph = euler_phi(m);
        if (n % ph) continue;
        if (to_rational(pow(cyclotomic(m), n / ph)) == cp) return true;
    }
    return false;
}

// ---------------------------------------------------------------- ideals

std::vector<PrimeIdealData> split_prime(const NumberField& K, const Integer& p)
{
    if (!is_prime(p)) throw MathError("split_prime: " + p.get_str() + " is not prime");
    if (!K.p_maximal(p)) throw MathError("Dedekind–Kummer inapplicable at p = " + p.get_str());
    std::vector<PrimeIdealData> out;
    for (auto& [g, e] : factor_mod_p(K.poly(), p)) {
        if (g.degree() == 0) continue;
        PrimeIdealData P;
        P.p = p;
        P.gen_poly = g;
        P.e = e;
        P.f = static_cast<int>(g.degree());
        P.norm = pow_int(p, P.f);
        out.push_back(P);
    }
    return out;
}

void FracIdeal::canonicalize()
{
    Integer g = den_;
    for (std::size_t i = 0; i < num_.rows(); ++i)
        for (std::size_t j = 0; j < num_.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num_(i, j).get_mpz_t());
    if (g != 1) {
        for (std::size_t i = 0; i < num_.rows(); ++i)
            for (std::size_t j = 0; j < num_.cols(); ++j) mpz_divexact(num_(i, j).get_mpz_t(), num_(i, j).get_mpz_t(), g.get_mpz_t());
        den_ /= g;
    }
}

FracIdeal FracIdeal::unit(FieldPtr k)
{
    FracIdeal I;
    I.num_ = IntMatrix::identity(k->degree());
    I.k_ = std::move(k);
    return I;
}

FracIdeal FracIdeal::principal(const NfElement& x)
{
    if (x.is_zero()) throw MathError("zero ideal");
    FracIdeal I;
    I.k_ = x.field();
    I.den_ = x.denominator();
    NfElement a = x * Rational(I.den_);
    IntMatrix M = to_integer(a.mult_matrix());
    I.num_ = lattice_hnf(M, abs(determinant(M)));
    I.canonicalize();
    return I;
}

FracIdeal FracIdeal::prime(FieldPtr k, const PrimeIdealData& P)
{
    const int n = k->degree();
    RatVector gc(n);
    NfElement g = NfElement::from_poly(k, to_rational(P.gen_poly));
    IntMatrix M = to_integer(g.mult_matrix());
    FracIdeal I;
    I.num_ = lattice_hnf(M, P.p);
    I.k_ = std::move(k);
    I.canonicalize();
    return I;
}

FracIdeal FracIdeal::from_generators(FieldPtr k, const IntMatrix& gens, const Integer& den)
{
    if (den <= 0) throw MathError("ideal denominator must be positive");
    FracIdeal I;
    I.num_ = lattice_hnf(gens);
    I.den_ = den;
    I.k_ = std::move(k);
    I.canonicalize();
    return I;
}

Rational FracIdeal::norm() const
{
    Rational d(abs(determinant(num_)));
    return d / Rational(pow_int(den_, k_->degree()));
}

bool FracIdeal::contains(const NfElement& x) const
{
    RatVector y = x.coords();
    for (auto& a : y) a *= den_;
    return lattice_contains(num_, y);
}

bool FracIdeal::is_integral() const { return den_ == 1; }

bool FracIdeal::is_module() const
{
    IntMatrix L = k_->lambda_matrix() * num_;
    for (std::size_t j = 0; j < L.cols(); ++j) {
        IntVector c = L.column(j);
        if (!lattice_contains(num_, RatVector(c.begin(), c.end()))) return false;
    }
    return true;
}

FracIdeal operator*(const FracIdeal& a, const FracIdeal& b)
{
    if (a.k_ != b.k_ && a.k_->poly() != b.k_->poly()) throw MathError("ideals over different fields");
    const std::size_t n = a.num_.rows();
    IntMatrix gens(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix Mi = int_mult_matrix(a.k_, a.num_.column(i));
        IntMatrix prod = Mi * b.num_;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) gens(r, i * n + j) = prod(r, j);
    }
    FracIdeal I;
    I.k_ = a.k_;
    I.num_ = lattice_hnf(gens, abs(determinant(a.num_) * determinant(b.num_)));
    I.den_ = a.den_ * b.den_;
    I.canonicalize();
    return I;
}

bool operator==(const FracIdeal& a, const FracIdeal& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

FracIdeal FracIdeal::inverse() const
{
    const std::size_t n = num_.rows();
    Integer a = abs(determinant(num_));
    if (a == 0) throw MathError("inverse of the zero ideal");
    IntMatrix X = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix Mj = int_mult_matrix(k_, num_.column(j));
        for (std::size_t r = 0; r < n; ++r) X = sublattice_congruence(X, Mj.row(r), a);
    }
    FracIdeal I;
    I.k_ = k_;
    I.num_ = X * den_;
    I.den_ = a;
    I.canonicalize();
    return I;
}

FracIdeal FracIdeal::pow(long k) const
{
    if (k < 0) return inverse().pow(-k);
    FracIdeal r = unit(k_), b = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string FracIdeal::to_string() const { return "(" + num_.to_string() + ")/" + den_.get_str(); }

namespace {

// Largest k <= bound with the integral lattice J inside P^k.
int integral_valuation(const FieldPtr& k, const IntMatrix& J, const PrimeIdealData& P, int bound)
{
    FracIdeal Pi = FracIdeal::prime(k, P);
    FracIdeal Pk = Pi;
    int v = 0;
    while (v < bound) {
        bool inside = true;
        for (std::size_t j = 0; j < J.cols() && inside; ++j) {
            IntVector c = J.column(j);
            inside = lattice_contains(Pk.num(), RatVector(c.begin(), c.end()));
        }
        if (!inside) break;
        ++v;
        Pk = Pk * Pi;
    }
    return v;
}

}  // namespace

int valuation(const NfElement& x, const PrimeIdealData& P)
{
    if (x.is_zero()) throw MathError("valuation of zero");
    const FieldPtr& k = x.field();
    if (!k->p_maximal(P.p)) throw MathError("Dedekind–Kummer inapplicable at p = " + P.p.get_str());
    Integer d = x.denominator();
    NfElement a = x * Rational(d);
    Rational nm = a.norm();
    int bound = valuation(Integer(abs(nm.get_num())), P.p) / P.f;
    IntVector ac = integral_coords(a);
    IntMatrix col(ac.size(), 1);
    col.set_column(0, ac);
    int v = integral_valuation(k, col, P, bound);
    return v - P.e * (d == 1 ? 0 : valuation(d, P.p));
}

int valuation(const FracIdeal& I, const PrimeIdealData& P)
{
    if (!I.field()->p_maximal(P.p)) throw MathError("Dedekind–Kummer inapplicable at p = " + P.p.get_str());
    Integer nm = abs(determinant(I.num()));
    int bound = valuation(nm, P.p) / P.f;
    int v = integral_valuation(I.field(), I.num(), P, bound);
    return v - P.e * (I.den() == 1 ? 0 : valuation(I.den(), P.p));
}

}  // namespace gaend
