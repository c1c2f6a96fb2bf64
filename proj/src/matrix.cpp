#include "gaend/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace gaend {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw MathError("ragged matrix literal");
        for (const auto& x : r) data_.push_back(x);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    return scalar(n, T(1));
}

template <class T>
Matrix<T> Matrix<T>::scalar(std::size_t n, const T& c)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const
{
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const
{
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
void Matrix<T>::set_column(std::size_t j, const std::vector<T>& v)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
bool Matrix<T>::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator*=(const T& c)
{
    for (auto& x : data_) x *= c;
    return *this;
}

template <class T>
Matrix<T> Matrix<T>::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_) throw MathError("dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const T& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

template <class T>
std::vector<T> Matrix<T>::operator*(const std::vector<T>& v) const
{
    if (cols_ != v.size()) throw MathError("dimension mismatch");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
}

template <class T>
std::string Matrix<T>::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << gaend::to_string((*this)(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

template class Matrix<Integer>;
template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw MathError("matrix is not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

bool is_integral(const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

Integer determinant(const IntMatrix& m)
{
    if (!m.square()) throw MathError("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m)
{
    if (!m.square()) throw MathError("determinant of non-square matrix");
    Integer d = common_denominator(m);
    IntMatrix im(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * d;
            im(i, j) = v.get_num();
        }
    Rational det(determinant(im));
    Rational scale(pow_int(d, m.rows()));
    return det / scale;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (!m.square()) throw MathError("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw MathError("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

RatMatrix power(const RatMatrix& m, long e)
{
    RatMatrix base = e < 0 ? inverse(m) : m;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatMatrix r = RatMatrix::identity(m.rows());
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

IntMatrix power(const IntMatrix& m, unsigned long e)
{
    IntMatrix base = m;
    IntMatrix r = IntMatrix::identity(m.rows());
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

RatVector solve(const RatMatrix& m, const RatVector& b)
{
    std::size_t n = m.rows();
    if (!m.square() || b.size() != n) throw MathError("solve: dimension mismatch");
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw MathError("singular matrix");
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix a = m;
    return rref(a).size();
}

RatMatrix kernel(const RatMatrix& m)
{
    RatMatrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], f) = -a(r, free_cols[f]);
    }
    return k;
}

Integer common_denominator(const RatMatrix& m)
{
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
    return d;
}

Integer common_denominator(const RatVector& v)
{
    Integer d = 1;
    for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

std::vector<Integer> denominator_primes(const RatMatrix& m)
{
    return prime_divisors(common_denominator(m));
}

Rational trace(const RatMatrix& m)
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

}  // namespace gaend
