// Dense exact linear algebra: generic Gaussian elimination over any exact
// field plus fraction-free (Bareiss) rank for rational matrices.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kleinorb/rational.hpp"

namespace kleinorb {

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t t = 0; t < n; ++t) m(t, t) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t r = 0; r < x.rows_; ++r)
            for (std::size_t t = 0; t < x.cols_; ++t) {
                if (x(r, t).is_zero()) continue;
                for (std::size_t c = 0; c < y.cols_; ++c) z(r, c) += x(r, t) * y(t, c);
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
        Matrix z = x;
        for (std::size_t t = 0; t < z.a_.size(); ++t) z.a_[t] += y.a_[t];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
        Matrix z = x;
        for (std::size_t t = 0; t < z.a_.size(); ++t) z.a_[t] -= y.a_[t];
        return z;
    }
    friend Matrix operator*(const F& s, const Matrix& x) {
        Matrix z = x;
        for (auto& v : z.a_) v = s * v;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

// Rank by plain Gaussian elimination over an exact field.
template <class F>
std::size_t rank_gauss(Matrix<F> m) {
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            F factor = m(r, col) / m(row, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Fraction-free rank: rows are scaled to integers, then Bareiss elimination
// keeps every intermediate entry an exact integer minor.
inline std::size_t rank_bareiss(const Matrix<Rational>& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < cols; ++c) l = boost::multiprecision::lcm(l, m(r, c).den());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).num() * (l / m(r, c).den());
    }
    BigInt prev = 1;
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != row) std::swap(a[p], a[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

// Basis of the null space of m, returned as the columns of the result.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != row)
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(p, c), m(row, c));
        F inv = F(1) / m(row, col);
        for (std::size_t c = 0; c < cols; ++c) m(row, c) = inv * m(row, c);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            F factor = m(r, col);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) -= factor * m(row, c);
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Matrix<F> ker(cols, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        ker(fc, t) = F(1);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) ker(c, t) = -m(static_cast<std::size_t>(pivot_of_col[c]), fc);
    }
    return ker;
}

template <class F>
Matrix<F> inverse(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    std::size_t n = m.rows();
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        if (p != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(p, c), m(col, c));
                std::swap(inv(p, c), inv(col, c));
            }
        F scale = F(1) / m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) = scale * m(col, c);
            inv(col, c) = scale * inv(col, c);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            F factor = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

// Incremental row-echelon span; add() reports whether the vector enlarged it.
template <class F>
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t width) : width_(width) {}

    bool add(std::vector<F> v) {
        if (v.size() != width_) throw std::invalid_argument("EchelonSpan: width mismatch");
        for (const auto& row : rows_) {
            const F& lead = v[row.pivot];
            if (lead.is_zero()) continue;
            F factor = lead / row.vec[row.pivot];
            for (std::size_t c = row.pivot; c < width_; ++c) v[c] -= factor * row.vec[c];
        }
        for (std::size_t c = 0; c < width_; ++c) {
            if (!v[c].is_zero()) {
                rows_.push_back({c, std::move(v)});
                return true;
            }
        }
        return false;
    }

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    std::vector<std::vector<F>> basis() const {
        std::vector<std::vector<F>> out;
        out.reserve(rows_.size());
        for (const auto& row : rows_) out.push_back(row.vec);
        return out;
    }

private:
    struct Row {
        std::size_t pivot;
        std::vector<F> vec;
    };
    std::size_t width_;
    std::vector<Row> rows_;
};

}  // namespace kleinorb
