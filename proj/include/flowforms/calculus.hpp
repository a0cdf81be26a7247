#pragma once

#include <string>
#include <vector>

#include "flowforms/exterior.hpp"
#include "flowforms/linalg.hpp"

namespace flowforms {

enum class OperatorKind { d, contract, lie };

inline std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::d: return "d";
        case OperatorKind::contract: return "i_X";
        case OperatorKind::lie: return "nabla_X";
    }
    return "?";
}

// A degree-homogeneous operator realized as an exact matrix between the
// enumerated monomial bases of two exterior degrees.
struct LinearMap {
    Matrix mat;
    int domain_degree = 0;
    int codomain_degree = 0;
    std::string label;

    std::size_t domain_dim() const { return mat.cols(); }
    std::size_t codomain_dim() const { return mat.rows(); }
    std::size_t rank() const { return flowforms::rank(mat); }
    std::size_t kernel_dim() const { return mat.cols() - flowforms::rank(mat); }
    std::size_t cokernel_dim() const { return mat.rows() - flowforms::rank(mat); }
    // Fredholm index: dim ker - dim coker = cols - rows.
    long index() const {
        return static_cast<long>(kernel_dim()) - static_cast<long>(cokernel_dim());
    }
};

// The three Cartan operators, extended from their values on generators:
// d as the degree +1 antiderivation, i_X as the degree -1 antiderivation,
// and the Lie derivative as their anticommutator.
class GeneratorCalculus {
   public:
    GeneratorCalculus() = default;
    GeneratorCalculus(FieldPtr field, std::vector<FormElement> d_values,
                      std::vector<Scalar> iX_values)
        : field_(std::move(field)), d_values_(std::move(d_values)), iX_values_(std::move(iX_values)) {
        if (d_values_.size() != iX_values_.size())
            throw ValidationError("generator calculus: d and i_X value counts differ");
        if (d_values_.size() > kMaxGenerators)
            throw ValidationError("generator calculus supports at most 32 generators");
    }

    std::size_t generator_count() const { return d_values_.size(); }
    const FieldPtr& field() const { return field_; }
    const std::vector<FormElement>& d_values() const { return d_values_; }
    const std::vector<Scalar>& iX_values() const { return iX_values_; }

    FormElement apply_d(const FormElement& a) const {
        FormElement out(field_);
        for (const auto& [mask, coeff] : a.terms()) {
            int pos = 0;
            for (auto idx : mask_indices(mask)) {
                const GenMask rest = mask & ~(GenMask{1} << idx);
                Scalar c = pos % 2 == 0 ? coeff : -coeff;
                out = out + wedge(d_values_[idx] * c, FormElement::monomial(field_, rest, one()));
                ++pos;
            }
        }
        return out;
    }

    FormElement contract(const FormElement& a) const {
        FormElement out(field_);
        for (const auto& [mask, coeff] : a.terms()) {
            int pos = 0;
            for (auto idx : mask_indices(mask)) {
                const GenMask rest = mask & ~(GenMask{1} << idx);
                Scalar c = (pos % 2 == 0 ? coeff : -coeff) * iX_values_[idx];
                out.add_term(rest, c);
                ++pos;
            }
        }
        return out;
    }

    FormElement lie(const FormElement& a) const {
        return apply_d(contract(a)) + contract(apply_d(a));
    }

    FormElement apply(OperatorKind kind, const FormElement& a) const {
        switch (kind) {
            case OperatorKind::d: return apply_d(a);
            case OperatorKind::contract: return contract(a);
            case OperatorKind::lie: return lie(a);
        }
        throw Error("unreachable");
    }

    static int codomain_degree(OperatorKind kind, int k) {
        switch (kind) {
            case OperatorKind::d: return k + 1;
            case OperatorKind::contract: return k - 1;
            case OperatorKind::lie: return k;
        }
        throw Error("unreachable");
    }

    std::vector<GenMask> basis(int k) const {
        return monomial_basis(generator_count(), k);
    }

    // Coordinates of a homogeneous element in the degree-k monomial basis.
    std::vector<Scalar> coords(const FormElement& a, int k) const {
        if (!a.is_homogeneous(k)) throw DegreeError("element is not homogeneous of the requested degree");
        auto b = basis(k);
        std::vector<Scalar> v(b.size(), Scalar(nvars()));
        for (const auto& [mask, coeff] : a.terms()) {
            auto it = std::lower_bound(b.begin(), b.end(), mask);
            v[static_cast<std::size_t>(it - b.begin())] = coeff;
        }
        return v;
    }

    FormElement from_coords(int k, const std::vector<Scalar>& v) const {
        auto b = basis(k);
        FormElement e(field_);
        for (std::size_t i = 0; i < b.size(); ++i) e.add_term(b[i], v[i]);
        return e;
    }

    // Matrix of the operator on degree k: column j is the image of the j-th
    // basis monomial in the codomain monomial basis.
    LinearMap operator_matrix(OperatorKind kind, int k) const {
        const int n = static_cast<int>(generator_count());
        if (k < 0 || k > n) throw DegreeError("operator degree out of range");
        const int kc = codomain_degree(kind, k);
        auto dom = basis(k);
        auto cod = basis(kc);
        LinearMap map;
        map.domain_degree = k;
        map.codomain_degree = kc;
        map.label = to_string(kind) + "@" + std::to_string(k);
        map.mat = Matrix(cod.size(), dom.size(), nvars());
        for (std::size_t j = 0; j < dom.size(); ++j) {
            FormElement img = apply(kind, FormElement::monomial(field_, dom[j], one()));
            if (img.is_zero()) continue;
            auto v = coords(img, kc);
            map.mat.set_column(j, v);
        }
        return map;
    }

    // d extended by the Leibniz rule must square to zero on every generator.
    void validate_d_squared(const std::vector<std::string>& generator_names) const {
        for (std::size_t i = 0; i < d_values_.size(); ++i) {
            if (!d_values_[i].is_zero() && !d_values_[i].is_homogeneous(2))
                throw ValidationError("d-value of generator '" + name(generator_names, i) +
                                      "' is not homogeneous of degree 2");
            if (!apply_d(d_values_[i]).is_zero())
                throw ValidationError("d^2 != 0 on generator '" + name(generator_names, i) + "'");
        }
    }

   private:
    std::size_t nvars() const { return field_ ? field_->nvars() : 0; }
    Scalar one() const { return Scalar::from_int(1, nvars()); }
    static std::string name(const std::vector<std::string>& names, std::size_t i) {
        return i < names.size() ? names[i] : std::to_string(i);
    }

    FieldPtr field_;
    std::vector<FormElement> d_values_;
    std::vector<Scalar> iX_values_;
};

}  // namespace flowforms
