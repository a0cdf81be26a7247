#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flowforms/scalar.hpp"

namespace flowforms {

// Dense matrix over the coefficient field. All arithmetic is exact.
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0), nvars_(0) {}
    Matrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Scalar(nvars)) {}

    static Matrix identity(std::size_t n, std::size_t nvars) {
        Matrix m(n, n, nvars);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from_int(1, nvars);
        return m;
    }
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows,
                               std::size_t nvars) {
        Matrix m(rows, cols.size(), nvars);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> column(std::size_t j) const {
        std::vector<Scalar> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    void set_column(std::size_t j, const std::vector<Scalar>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.nvars_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
        Matrix r(a.rows_, a.cols_, a.nvars_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw Error("matrix apply shape mismatch");
        std::vector<Scalar> r(rows_, Scalar(nvars_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix hstack(const Matrix& other) const {
        if (other.rows_ != rows_) throw Error("hstack shape mismatch");
        Matrix r(rows_, cols_ + other.cols_, nvars_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
        }
        return r;
    }

    Matrix columns_slice(std::size_t begin, std::size_t end) const {
        Matrix r(rows_, end - begin, nvars_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = begin; j < end; ++j) r(i, j - begin) = (*this)(i, j);
        return r;
    }

   private:
    std::size_t rows_, cols_, nvars_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice is
// deterministic (first nonzero entry in column order), so downstream bases and
// quotient representatives are reproducible.
inline Echelon rref(Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        Scalar inv = Scalar::from_int(1, m.nvars()) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    e.reduced = std::move(m);
    return e;
}

// Fraction-free rank (Bareiss) on the denominator-cleared polynomial matrix.
// Used as an independent route for rank computations over function fields.
inline std::size_t rank_bareiss(const Matrix& m) {
    const std::size_t nvars = m.nvars();
    std::vector<std::vector<Polynomial>> a(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(nvars)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial common = Polynomial::constant(Rational(1), nvars);
        for (std::size_t j = 0; j < m.cols(); ++j) common = poly_lcm(common, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j).num() * common.divide_exact(m(i, j).den());
    }
    std::size_t rank = 0;
    Polynomial prev = Polynomial::constant(Rational(1), nvars);
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]).divide_exact(prev);
            a[i][col] = Polynomial(nvars);
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

// Basis of the null space, one column per free column of m.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(m.nvars()));
        v[j] = Scalar::from_int(1, m.nvars());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Columns of m at its pivot positions: a deterministic basis of the column space.
inline Matrix image_basis(const Matrix& m) {
    Echelon e = rref(m);
    Matrix r(m.rows(), e.rank, m.nvars());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, k) = m(i, e.pivots[k]);
    return r;
}

// One particular solution of A x = b, or nullopt when inconsistent. The
// pivot structure depends only on A, so b -> x is linear for fixed A.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    Matrix rhs(a.rows(), 1, a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
    Echelon e = rref(a.hstack(rhs));
    std::vector<Scalar> x(a.cols(), Scalar(a.nvars()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

inline bool in_column_span(const Matrix& basis, const std::vector<Scalar>& v) {
    return solve(basis, v).has_value();
}

}  // namespace flowforms
