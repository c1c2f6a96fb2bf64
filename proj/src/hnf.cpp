#include "gaend/hnf.hpp"

#include <utility>

namespace gaend {

namespace {

void swap_columns(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// col_dst -= q * col_src
void axpy_column(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (a(r, src) != 0) a(r, dst) -= q * a(r, src);
}

void negate_column(IntMatrix& a, std::size_t j)
{
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
}

struct ColumnHnf {
    IntMatrix H;
    IntMatrix U;
    std::size_t first_pivot_col;       // columns [first_pivot_col, m) carry pivots
    std::vector<std::size_t> pivot_row;  // pivot row of each pivot column (indexed by column)
    bool every_row_has_pivot;
};

// Bottom-up column echelon form by Euclidean column reduction, then
// reduction of the entries right of each pivot.
ColumnHnf column_hnf(const IntMatrix& M, bool track)
{
    const std::size_t n = M.rows(), m = M.cols();
    ColumnHnf res{M, track ? IntMatrix::identity(m) : IntMatrix(), m, std::vector<std::size_t>(m, n), true};
    IntMatrix& A = res.H;
    IntMatrix& U = res.U;
    std::size_t active = m;

    for (std::size_t rr = n; rr-- > 0;) {
        for (;;) {
            std::size_t jmin = active;
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j < active; ++j) {
                if (A(rr, j) == 0) continue;
                ++nonzero;
                if (jmin == active || abs(A(rr, j)) < abs(A(rr, jmin))) jmin = j;
            }
            if (nonzero == 0) {
                res.every_row_has_pivot = false;
                break;
            }
            if (nonzero == 1) {
                swap_columns(A, jmin, active - 1);
                if (track) swap_columns(U, jmin, active - 1);
                if (A(rr, active - 1) < 0) {
                    negate_column(A, active - 1);
                    if (track) negate_column(U, active - 1);
                }
                --active;
                res.pivot_row[active] = rr;
                break;
            }
            for (std::size_t j = 0; j < active; ++j) {
                if (j == jmin || A(rr, j) == 0) continue;
                Integer q = floor_div(A(rr, j), A(rr, jmin));
                axpy_column(A, j, jmin, q);
                if (track) axpy_column(U, j, jmin, q);
            }
        }
        if (active == 0) {
            // remaining rows have no room for pivots
            for (std::size_t r2 = rr; r2-- > 0;) {
                (void)r2;
                res.every_row_has_pivot = false;
            }
            break;
        }
    }
    res.first_pivot_col = active;

    // Reduce entries right of each pivot, working pivot rows from high to low
    // within each target column so earlier reductions are not disturbed.
    for (std::size_t c = active; c < m; ++c) {
        for (std::size_t k = c; k-- > active;) {
            std::size_t r = res.pivot_row[k];
            Integer q = floor_div(A(r, c), A(r, k));
            if (q != 0) {
                axpy_column(A, c, k, q);
                if (track) axpy_column(U, c, k, q);
            }
        }
    }
    return res;
}

void normalize_upper(IntMatrix& H)
{
    const std::size_t n = H.rows();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = c; k-- > 0;) {
            Integer q = floor_div(H(k, c), H(k, k));
            if (q != 0) axpy_column(H, c, k, q);
        }
}

}  // namespace

HnfResult hnf(const IntMatrix& M, bool full_rank)
{
    if (!M.square()) throw MathError("hnf expects a square matrix");
    auto res = column_hnf(M, true);
    if (full_rank && (res.first_pivot_col != 0 || !res.every_row_has_pivot)) throw MathError("singular lattice");
    return {std::move(res.H), std::move(res.U)};
}

IntMatrix lattice_hnf(const IntMatrix& generators, const Integer& d)
{
    if (d <= 0) throw MathError("lattice_hnf: modulus must be positive");
    const std::size_t n = generators.rows();
    IntMatrix H = IntMatrix::scalar(n, d);
    for (std::size_t g = 0; g < generators.cols(); ++g) {
        IntVector v = generators.column(g);
        for (auto& x : v) x = nonneg_mod(x, d);
        for (std::size_t r = n; r-- > 0;) {
            if (v[r] == 0) continue;
            Integer a = H(r, r), b = v[r], s, t;
            Integer gg = ext_gcd(a, b, s, t);
            Integer ca = a / gg, cb = b / gg;
            for (std::size_t i = 0; i <= r; ++i) {
                Integer h = H(i, r);
                H(i, r) = s * h + t * v[i];
                v[i] = nonneg_mod(ca * v[i] - cb * h, d);
            }
        }
        normalize_upper(H);
    }
    return H;
}

IntMatrix lattice_hnf(const IntMatrix& generators)
{
    auto res = column_hnf(generators, false);
    const std::size_t n = generators.rows();
    if (generators.cols() - res.first_pivot_col != n) throw MathError("singular lattice");
    IntMatrix H(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H(i, j) = res.H(i, res.first_pivot_col + j);
    return H;
}

RatVector triangular_coordinates(const IntMatrix& H, const RatVector& v)
{
    const std::size_t n = H.rows();
    RatVector y(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = v[r];
        for (std::size_t j = r + 1; j < n; ++j) acc -= Rational(H(r, j)) * y[j];
        if (H(r, r) == 0) throw MathError("triangular_coordinates: singular basis");
        y[r] = acc / Rational(H(r, r));
    }
    return y;
}

bool lattice_contains(const IntMatrix& H, const RatVector& v)
{
    for (const auto& y : triangular_coordinates(H, v))
        if (y.get_den() != 1) return false;
    return true;
}

IntMatrix sublattice_congruence(const IntMatrix& H, const IntVector& c, const Integer& a)
{
    const std::size_t n = H.rows();
    IntMatrix row(1, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) s += c[i] * H(i, j);
        row(0, j) = nonneg_mod(s, a);
    }
    row(0, n) = a;
    auto res = column_hnf(row, true);
    IntMatrix Y(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Y(i, j) = res.U(i, j);
    Integer det = 1;
    for (std::size_t i = 0; i < n; ++i) det *= H(i, i);
    return lattice_hnf(H * Y, abs(det) * a);
}

}  // namespace gaend
