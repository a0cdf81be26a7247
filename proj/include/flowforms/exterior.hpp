#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowforms/scalar.hpp"

namespace flowforms {

// A basis monomial of the exterior algebra is a set of generator indices,
// stored as a bitmask with indices strictly increasing by construction.
using GenMask = std::uint32_t;

constexpr std::size_t kMaxGenerators = 32;

inline int mask_degree(GenMask m) { return std::popcount(m); }

// Sign incurred by sorting the concatenation (sorted a, sorted b) into a
// single increasing monomial: (-1)^{#inversions}. Masks must be disjoint.
inline int concat_sign(GenMask a, GenMask b) {
    int inversions = 0;
    while (b != 0) {
        GenMask lowest = b & (~b + 1);
        // generators of a that are larger than this element of b
        inversions += std::popcount(a & ~(lowest | (lowest - 1)));
        b &= b - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

inline std::vector<std::size_t> mask_indices(GenMask m) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
        if (m & (GenMask{1} << i)) v.push_back(i);
    return v;
}

// All degree-k basis monomials on n generators, ascending as masks.
inline std::vector<GenMask> monomial_basis(std::size_t n, int k) {
    std::vector<GenMask> out;
    if (k < 0 || k > static_cast<int>(n)) return out;
    const GenMask top = n >= kMaxGenerators ? ~GenMask{0} : ((GenMask{1} << n) - 1);
    for (GenMask m = 0; m <= top; ++m) {
        if (std::popcount(m) == k) out.push_back(m);
        if (m == top) break;
    }
    return out;
}

// A (possibly mixed-degree) exterior-algebra element with exact coefficients.
// No zero coefficients are stored: equality is structural.
class FormElement {
   public:
    FormElement() = default;
    explicit FormElement(FieldPtr field) : field_(std::move(field)) {}

    static FormElement zero(FieldPtr field) { return FormElement(std::move(field)); }
    static FormElement scalar(FieldPtr field, Scalar c) {
        FormElement e(std::move(field));
        e.add_term(0, std::move(c));
        return e;
    }
    static FormElement generator(FieldPtr field, std::size_t index) {
        FormElement e(field);
        e.add_term(GenMask{1} << index, Scalar::from_int(1, field->nvars()));
        return e;
    }
    static FormElement monomial(FieldPtr field, GenMask mask, Scalar c) {
        FormElement e(std::move(field));
        e.add_term(mask, std::move(c));
        return e;
    }

    const FieldPtr& field() const { return field_; }
    const std::map<GenMask, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneous degree, or nullopt for 0 and for mixed-degree elements.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int k = mask_degree(m);
            if (d && *d != k) return std::nullopt;
            d = k;
        }
        return d;
    }
    bool is_homogeneous(int k) const {
        for (const auto& [m, c] : terms_)
            if (mask_degree(m) != k) return false;
        return true;
    }
    FormElement component(int k) const {
        FormElement e(field_);
        for (const auto& [m, c] : terms_)
            if (mask_degree(m) == k) e.terms_[m] = c;
        return e;
    }
    int max_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, mask_degree(m));
        return d;
    }

    friend bool operator==(const FormElement& a, const FormElement& b) {
        return same_field(a.field_, b.field_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

    friend FormElement operator+(const FormElement& a, const FormElement& b) {
        a.check_field(b);
        FormElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend FormElement operator-(const FormElement& a, const FormElement& b) {
        a.check_field(b);
        FormElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    FormElement operator-() const {
        FormElement r(field_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend FormElement operator*(const FormElement& a, const Scalar& c) {
        FormElement r(a.field_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
        return r;
    }

    FieldPtr field_or_throw() const {
        if (!field_) throw Error("form element without a field");
        return field_;
    }

    void check_field(const FormElement& other) const {
        if (!same_field(field_, other.field_))
            throw FieldMismatchError("operands live over different coefficient fields");
    }

    void add_term(GenMask m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string to_string(const std::vector<std::string>& generator_names) const {
        if (terms_.empty()) return "0";
        const auto& syms = field_ ? field_->symbols : std::vector<std::string>{};
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (auto i : mask_indices(m)) {
                if (!mono.empty()) mono += "∧";
                mono += i < generator_names.size() ? generator_names[i] : ("e" + std::to_string(i));
            }
            std::string cs = c.to_string(syms);
            std::string term;
            if (mono.empty())
                term = cs;
            else if (c.is_one())
                term = mono;
            else if ((-c).is_one())
                term = "-" + mono;
            else if (c.num().terms().size() > 1 && c.den().is_constant())
                term = "(" + cs + ")*" + mono;
            else
                term = cs + "*" + mono;
            if (out.empty())
                out = term;
            else if (!term.empty() && term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        return out;
    }

   private:
    FieldPtr field_;
    std::map<GenMask, Scalar> terms_;
};

// Exterior product. Repeated generators annihilate; the coefficient picks up
// the parity of the merge permutation.
inline FormElement wedge(const FormElement& a, const FormElement& b) {
    a.check_field(b);
    FormElement r(a.field() ? a.field() : b.field());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            Scalar c = ca * cb;
            if (concat_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    return r;
}

}  // namespace flowforms
