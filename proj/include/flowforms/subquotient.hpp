#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flowforms/linalg.hpp"

namespace flowforms {

// A subspace of the degree-k slice of the model span, held as an exact
// column basis. Independence of the basis is verified on construction.
struct Subspace {
    int degree = 0;
    Matrix basis;  // ambient_dim x dim

    Subspace() = default;
    Subspace(int degree, Matrix basis_cols) : degree(degree), basis(std::move(basis_cols)) {
        if (rank(basis) != basis.cols())
            throw ModelInconsistencyError("subspace basis is not linearly independent");
    }

    static Subspace zero(int degree, std::size_t ambient_dim, std::size_t nvars) {
        return Subspace(degree, Matrix(ambient_dim, 0, nvars));
    }
    static Subspace full(int degree, std::size_t ambient_dim, std::size_t nvars) {
        return Subspace(degree, Matrix::identity(ambient_dim, nvars));
    }
    static Subspace from_kernel(int degree, const Matrix& op, std::size_t ambient_dim) {
        auto vecs = kernel_basis(op);
        return Subspace(degree, Matrix::from_columns(vecs, ambient_dim, op.nvars()));
    }
    static Subspace from_image(int degree, const Matrix& op) {
        return Subspace(degree, image_basis(op));
    }

    std::size_t dim() const { return basis.cols(); }
    std::size_t ambient_dim() const { return basis.rows(); }

    bool contains(const std::vector<Scalar>& v) const { return in_column_span(basis, v); }
    bool contains_subspace(const Subspace& other) const {
        for (std::size_t j = 0; j < other.dim(); ++j)
            if (!contains(other.basis.column(j))) return false;
        return true;
    }
    bool equals(const Subspace& other) const {
        return dim() == other.dim() && contains_subspace(other);
    }
};

// span(A) ∩ span(B), via the kernel of the stacked coordinate matrix [A | B].
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("intersection in different ambient spaces");
    Matrix stacked = a.basis.hstack(b.basis);
    auto ker = kernel_basis(stacked);
    Matrix cand(a.ambient_dim(), ker.size(), stacked.nvars());
    for (std::size_t j = 0; j < ker.size(); ++j) {
        std::vector<Scalar> xa(ker[j].begin(), ker[j].begin() + a.dim());
        cand.set_column(j, a.basis.apply(xa));
    }
    return Subspace(a.degree, image_basis(cand));
}

// A quotient numerator/denominator with a deterministic set of quotient
// representatives: the pivot columns of the numerator complement in the
// column-echelon sense.
class SubquotientSpace {
   public:
    SubquotientSpace() = default;
    SubquotientSpace(Subspace numerator, Subspace denominator, std::string label = "")
        : numerator_(std::move(numerator)), denominator_(std::move(denominator)), label_(std::move(label)) {
        if (!numerator_.contains_subspace(denominator_))
            throw ModelInconsistencyError("quotient denominator is not contained in the numerator" +
                                          (label_.empty() ? "" : " (" + label_ + ")"));
        Matrix combined = denominator_.basis.hstack(numerator_.basis);
        Echelon e = rref(combined);
        std::vector<std::size_t> rep_cols;
        for (auto p : e.pivots)
            if (p >= denominator_.dim()) rep_cols.push_back(p - denominator_.dim());
        reps_ = Matrix(numerator_.ambient_dim(), rep_cols.size(), combined.nvars());
        for (std::size_t k = 0; k < rep_cols.size(); ++k)
            for (std::size_t i = 0; i < numerator_.ambient_dim(); ++i)
                reps_(i, k) = numerator_.basis(i, rep_cols[k]);
        coord_basis_ = denominator_.basis.hstack(reps_);
    }

    static SubquotientSpace from_subspace(Subspace s, std::string label = "") {
        const std::size_t nvars = s.basis.nvars();
        Subspace den = Subspace::zero(s.degree, s.ambient_dim(), nvars);
        return SubquotientSpace(std::move(s), std::move(den), std::move(label));
    }

    std::size_t dim() const { return reps_.cols(); }
    int degree() const { return numerator_.degree; }
    const Subspace& numerator() const { return numerator_; }
    const Subspace& denominator() const { return denominator_; }
    const Matrix& representatives() const { return reps_; }
    const std::string& label() const { return label_; }

    // Quotient coordinates of an ambient vector lying in the numerator span.
    std::vector<Scalar> coords(const std::vector<Scalar>& v) const {
        auto x = solve(coord_basis_, v);
        if (!x)
            throw ModelInconsistencyError("vector not in the numerator span" +
                                          (label_.empty() ? "" : " (" + label_ + ")"));
        return std::vector<Scalar>(x->begin() + denominator_.dim(), x->end());
    }

    bool class_is_zero(const std::vector<Scalar>& v) const {
        for (const auto& c : coords(v))
            if (!c.is_zero()) return false;
        return true;
    }

   private:
    Subspace numerator_, denominator_;
    Matrix reps_;         // ambient x dim, quotient representatives
    Matrix coord_basis_;  // [den | reps]
    std::string label_;
};

// Matrix of the map induced on quotients by an ambient-level linear function.
// Well-definedness is verified exactly: each denominator basis vector of the
// source must land in the denominator of the target.
inline Matrix induced_matrix(const SubquotientSpace& src, const SubquotientSpace& dst,
                             const std::function<std::vector<Scalar>(const std::vector<Scalar>&)>& f) {
    for (std::size_t j = 0; j < src.denominator().dim(); ++j) {
        auto w = f(src.denominator().basis.column(j));
        if (!dst.class_is_zero(w))
            throw ModelInconsistencyError("induced map is not well defined on the quotient (" +
                                          src.label() + " -> " + dst.label() + ")");
    }
    const std::size_t nvars = src.representatives().nvars();
    Matrix m(dst.dim(), src.dim(), nvars);
    for (std::size_t j = 0; j < src.dim(); ++j)
        m.set_column(j, dst.coords(f(src.representatives().column(j))));
    return m;
}

}  // namespace flowforms
