#pragma once

#include <string>
#include <vector>

#include "flowforms/model.hpp"
#include "flowforms/subquotient.hpp"

namespace flowforms {

namespace detail {

inline Matrix op_matrix(const FormModel& m, OperatorKind kind, int k) {
    return m.calc.operator_matrix(kind, k).mat;
}

// Zero-column matrix standing for the basis of the zero space in degree k
// (used when k falls outside [0, n]).
inline Subspace zero_space(const FormModel& m, int k) {
    return Subspace::zero(k, monomial_basis(m.generator_names.size(), k).size(), m.nvars());
}

}  // namespace detail

// Lambda^k_X: kernel of contraction in degree k.
inline Subspace subspace_lambda_X(const FormModel& m, int k) {
    m.check_degree(k);
    if (k == 0)  // i_X is identically zero on functions
        return Subspace::full(0, 1, m.nvars());
    return Subspace::from_kernel(k, detail::op_matrix(m, OperatorKind::contract, k),
                                 m.calc.basis(k).size());
}

// Lambda^k_inv: kernel of the Lie derivative in degree k.
inline Subspace subspace_invariant(const FormModel& m, int k) {
    m.check_degree(k);
    return Subspace::from_kernel(k, detail::op_matrix(m, OperatorKind::lie, k),
                                 m.calc.basis(k).size());
}

// Lambda^k(M/X) = Lambda^k_inv ∩ Lambda^k_X, via the kernel of the stacked
// operator matrix.
inline Subspace subspace_basic(const FormModel& m, int k) {
    m.check_degree(k);
    Matrix lie = detail::op_matrix(m, OperatorKind::lie, k);
    Matrix con = detail::op_matrix(m, OperatorKind::contract, k);
    Matrix stacked(lie.rows() + con.rows(), lie.cols(), m.nvars());
    for (std::size_t i = 0; i < lie.rows(); ++i)
        for (std::size_t j = 0; j < lie.cols(); ++j) stacked(i, j) = lie(i, j);
    for (std::size_t i = 0; i < con.rows(); ++i)
        for (std::size_t j = 0; j < con.cols(); ++j) stacked(lie.rows() + i, j) = con(i, j);
    return Subspace::from_kernel(k, stacked, m.calc.basis(k).size());
}

// Closed k-forms of the model span.
inline Subspace subspace_closed(const FormModel& m, int k) {
    m.check_degree(k);
    if (k == m.dimension()) return Subspace::full(k, m.calc.basis(k).size(), m.nvars());
    return Subspace::from_kernel(k, detail::op_matrix(m, OperatorKind::d, k),
                                 m.calc.basis(k).size());
}

// Image of d restricted to a subspace of degree k-1 forms, as a degree-k subspace.
inline Subspace d_image_of(const FormModel& m, const Subspace& s) {
    const int k = s.degree + 1;
    if (s.degree < 0 || k > m.dimension())
        return detail::zero_space(m, k);
    Matrix d = detail::op_matrix(m, OperatorKind::d, s.degree);
    return Subspace::from_image(k, d * s.basis);
}

// H^k_X = Z^k / d(Lambda^{k-1}_X).
inline SubquotientSpace relative_H_X(const FormModel& m, int k) {
    m.check_degree(k);
    Subspace z = subspace_closed(m, k);
    Subspace den = k == 0 ? detail::zero_space(m, 0) : d_image_of(m, subspace_lambda_X(m, k - 1));
    return SubquotientSpace(std::move(z), std::move(den), "H^" + std::to_string(k) + "_X");
}

enum class ComplexKind { de_rham, invariant, basic };

inline std::string to_string(ComplexKind c) {
    switch (c) {
        case ComplexKind::de_rham: return "de-rham";
        case ComplexKind::invariant: return "invariant";
        case ComplexKind::basic: return "basic";
    }
    return "?";
}

inline Subspace complex_slice(const FormModel& m, ComplexKind c, int k) {
    if (k < 0 || k > m.dimension()) return detail::zero_space(m, k);
    switch (c) {
        case ComplexKind::de_rham: return Subspace::full(k, m.calc.basis(k).size(), m.nvars());
        case ComplexKind::invariant: return subspace_invariant(m, k);
        case ComplexKind::basic: return subspace_basic(m, k);
    }
    throw Error("unreachable");
}

// Cohomology of the chosen subcomplex at degree k. The subcomplex is closed
// under d (Lemma-1 style containment); the quotient constructor verifies it.
inline SubquotientSpace cohomology(const FormModel& m, ComplexKind c, int k) {
    m.check_degree(k);
    Subspace slice = complex_slice(m, c, k);
    Subspace closed = intersect(slice, subspace_closed(m, k));
    Subspace den = k == 0 ? detail::zero_space(m, 0) : d_image_of(m, complex_slice(m, c, k - 1));
    return SubquotientSpace(std::move(closed), std::move(den),
                            "H^" + std::to_string(k) + "(" + to_string(c) + ")");
}

inline SubquotientSpace basic_cohomology(const FormModel& m, int k) {
    return cohomology(m, ComplexKind::basic, k);
}
inline SubquotientSpace invariant_cohomology(const FormModel& m, int k) {
    return cohomology(m, ComplexKind::invariant, k);
}
inline SubquotientSpace de_rham_cohomology(const FormModel& m, int k) {
    return cohomology(m, ComplexKind::de_rham, k);
}

// Im(i_X) in degree k, i.e. the image of contraction from degree k+1.
inline Subspace contraction_image(const FormModel& m, int k) {
    m.check_degree(k);
    if (k + 1 > m.dimension()) return detail::zero_space(m, k);
    return Subspace::from_image(k, detail::op_matrix(m, OperatorKind::contract, k + 1));
}

// C^k_X = (Im(i_X) ∩ Lambda^k_X) / nabla(Lambda^k_X). The intersection is a
// formality (i_X^2 = 0 puts the image inside Lambda_X) but is computed, and
// the Lemma-1 containment of the denominator is verified by construction.
inline SubquotientSpace cokernel_C(const FormModel& m, int k) {
    m.check_degree(k);
    Subspace num = intersect(contraction_image(m, k), subspace_lambda_X(m, k));
    Matrix lie = detail::op_matrix(m, OperatorKind::lie, k);
    Subspace den = Subspace::from_image(k, lie * subspace_lambda_X(m, k).basis);
    return SubquotientSpace(std::move(num), std::move(den), "C^" + std::to_string(k) + "_X");
}

// Ker(i_X)/Im(i_X) at degree k.
inline SubquotientSpace contraction_homology(const FormModel& m, int k) {
    m.check_degree(k);
    return SubquotientSpace(subspace_lambda_X(m, k), contraction_image(m, k),
                            "ker(i_X)/im(i_X)@" + std::to_string(k));
}

struct CokernelComplex {
    std::vector<SubquotientSpace> spaces;  // C^0 .. C^{n-1}
    std::vector<Matrix> d_C;               // d_C^k : C^k -> C^{k+1}, k = 0..n-2
    bool d_squared_zero = true;
    std::vector<long> h_dims;              // model-internal H^k_C
};

// The cokernel complex (C, d_C) with d_C v = i_X d u for any contraction
// preimage u of v. Well-definedness modulo Im(nabla^{k,*}) is verified both on
// the denominator of C^k and on the preimage ambiguity ker(i_X).
inline CokernelComplex cokernel_complex(const FormModel& m) {
    const int n = m.dimension();
    CokernelComplex out;
    for (int k = 0; k < n; ++k) out.spaces.push_back(cokernel_C(m, k));
    for (int k = 0; k + 1 < n; ++k) {
        Matrix icontract = detail::op_matrix(m, OperatorKind::contract, k + 1);
        Matrix d_up = detail::op_matrix(m, OperatorKind::d, k + 1);
        Matrix contract_down = detail::op_matrix(m, OperatorKind::contract, k + 2);
        auto step = [&](const std::vector<Scalar>& v) {
            auto u = solve(icontract, v);
            if (!u)
                throw ModelInconsistencyError("cokernel complex: no contraction preimage in degree " +
                                              std::to_string(k + 1));
            return contract_down.apply(d_up.apply(*u));
        };
        out.d_C.push_back(induced_matrix(out.spaces[k], out.spaces[k + 1], step));
        // the preimage is determined up to ker(i_X); any such shift must die
        // in the target quotient
        for (const auto& w : kernel_basis(icontract)) {
            auto shift = contract_down.apply(d_up.apply(w));
            if (!out.spaces[k + 1].class_is_zero(shift))
                throw ModelInconsistencyError(
                    "cokernel complex differential depends on the contraction preimage in degree " +
                    std::to_string(k));
        }
    }
    for (std::size_t k = 0; k + 1 < out.d_C.size(); ++k)
        if (!(out.d_C[k + 1] * out.d_C[k]).is_zero()) out.d_squared_zero = false;
    for (int k = 0; k < n; ++k) {
        long ker = k + 1 < n ? static_cast<long>(out.spaces[k].dim()) - static_cast<long>(rank(out.d_C[k]))
                             : static_cast<long>(out.spaces[k].dim());
        long im = k > 0 ? static_cast<long>(rank(out.d_C[k - 1])) : 0;
        out.h_dims.push_back(ker - im);
    }
    return out;
}

struct Proposition1Report {
    long dim_H_n_X = 0;
    long dim_C_top = 0;
    bool equal = false;
};

// dim H^n_X = dim C^{n-1}_X (the top-degree isomorphism).
inline Proposition1Report proposition1_check(const FormModel& m) {
    const int n = m.dimension();
    Proposition1Report r;
    r.dim_H_n_X = static_cast<long>(relative_H_X(m, n).dim());
    r.dim_C_top = static_cast<long>(cokernel_C(m, n - 1).dim());
    r.equal = r.dim_H_n_X == r.dim_C_top;
    return r;
}

}  // namespace flowforms
