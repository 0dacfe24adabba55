#include "waringlab/matrix.hpp"

#include <algorithm>
#include <utility>

namespace waringlab {

namespace {

struct GaussInt {
    Integer re = 0;
    Integer im = 0;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact division; the caller guarantees divisibility.
GaussInt div_exact(const GaussInt& a, const GaussInt& b)
{
    if (sgn(b.im) == 0) {
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
        return q;
    }
    Integer n = b.re * b.re + b.im * b.im;
    Integer re = a.re * b.re + a.im * b.im;
    Integer im = a.im * b.re - a.re * b.im;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

}  // namespace

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error("matrix column has wrong length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

bool Matrix::is_real() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::operator*(std::span<const Scalar> v) const
{
    if (v.size() != cols_) throw Error("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

std::size_t Matrix::rank() const
{
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::vector<GaussInt>> a(rows_, std::vector<GaussInt>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            a[r][c].re = (l / s.re().get_den()) * s.re().get_num();
            a[r][c].im = (l / s.im().get_den()) * s.im().get_num();
        }
    }
    GaussInt prev{1, 0};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t p = rank;
        while (p < rows_ && a[p][c].is_zero()) ++p;
        if (p == rows_) continue;
        std::swap(a[p], a[rank]);
        const GaussInt piv = a[rank][c];
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            const GaussInt lead = a[r][c];
            for (std::size_t j = c + 1; j < cols_; ++j)
                a[r][j] = div_exact(sub(mul(piv, a[r][j]), mul(lead, a[rank][j])), prev);
            a[r][c] = GaussInt{};
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

Echelon Matrix::rref() const
{
    Echelon e{*this, {}};
    Matrix& m = e.reduced;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t p = row;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
        Scalar inv = m(row, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            Scalar f = m(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    return e;
}

std::vector<Vector> Matrix::kernel() const
{
    auto e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols_);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> Matrix::solve(std::span<const Scalar> b) const
{
    if (b.size() != rows_) throw Error("right-hand side has wrong length");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    auto e = aug.rref();
    if (!e.pivots.empty() && e.pivots.back() == cols_) return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = Scalar(1);
    }
    auto e = aug.rref();
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Scalar Matrix::determinant() const
{
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    Matrix m = *this;
    Scalar det(1);
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::size_t span_rank(std::span<const Vector> vectors)
{
    if (vectors.empty()) return 0;
    return Matrix::from_rows(vectors, vectors.front().size()).rank();
}

bool proportional(std::span<const Scalar> u, std::span<const Scalar> v)
{
    if (u.size() != v.size()) return false;
    std::size_t k = 0;
    while (k < u.size() && u[k].is_zero()) ++k;
    if (k == u.size() || v[k].is_zero()) return false;
    Scalar ratio = v[k] / u[k];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] * ratio != v[i]) return false;
    return true;
}

}  // namespace waringlab
