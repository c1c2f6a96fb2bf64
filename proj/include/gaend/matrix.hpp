#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gaend/integer.hpp"

namespace gaend {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const T& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const;
    std::vector<T> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<T>& v);

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const T& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator*(const Matrix& o) const;
    std::vector<T> operator*(const std::vector<T>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

extern template class Matrix<Integer>;
extern template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Throws MathError if any entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

bool is_integral(const RatMatrix& m);

/// Fraction-free Bareiss determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Throws MathError("singular matrix") when not invertible.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

/// Integer power; negative exponents require a nonsingular matrix.
RatMatrix power(const RatMatrix& m, long e);
IntMatrix power(const IntMatrix& m, unsigned long e);

/// Solve m x = b over Q; empty optional-like result signalled by throw when singular.
RatVector solve(const RatMatrix& m, const RatVector& b);

/// Rank over Q.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel over Q (columns of the returned n x k matrix).
RatMatrix kernel(const RatMatrix& m);

/// Least common multiple of the entry denominators.
Integer common_denominator(const RatMatrix& m);
Integer common_denominator(const RatVector& v);

/// All prime factors of entry denominators.
std::vector<Integer> denominator_primes(const RatMatrix& m);

Rational trace(const RatMatrix& m);

}  // namespace gaend
