#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flowforms/polynomial.hpp"

namespace flowforms {

// Coefficient field: rational functions in a list of formal symbols over Q.
// With no symbols this is plain Q.
struct Field {
    std::vector<std::string> symbols;

    std::size_t nvars() const { return symbols.size(); }
    friend bool operator==(const Field& a, const Field& b) { return a.symbols == b.symbols; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::vector<std::string> symbols = {}) {
    return std::make_shared<const Field>(Field{std::move(symbols)});
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

// One field element: a reduced fraction num/den of multivariate polynomials.
// After reduction den is integer-primitive with positive leading coefficient,
// so the representation is canonical and equality is structural.
class Scalar {
   public:
    explicit Scalar(std::size_t nvars = 0)
        : num_(Polynomial(nvars)), den_(Polynomial::constant(Rational(1), nvars)) {}

    Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("zero denominator in field element");
        reduce();
    }

    static Scalar from_rational(const Rational& q, std::size_t nvars) {
        Scalar s(nvars);
        s.num_ = Polynomial::constant(q, nvars);
        return s;
    }
    static Scalar from_int(long v, std::size_t nvars) { return from_rational(Rational(v), nvars); }
    static Scalar symbol(std::size_t index, std::size_t nvars) {
        Scalar s(nvars);
        s.num_ = Polynomial::variable(index, nvars);
        return s;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const {
        return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant() &&
               num_.constant_value() == 1;
    }
    std::size_t nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw Error("division by zero field element");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    std::string to_string(const std::vector<std::string>& names) const {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
        std::string n = num_.to_string(names);
        std::string d = den_.to_string(names);
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

    // Parse a rational literal or a symbol name against the field's symbol list.
    static Scalar parse(const std::string& text, const Field& field) {
        for (std::size_t i = 0; i < field.symbols.size(); ++i)
            if (field.symbols[i] == text) return symbol(i, field.nvars());
        return from_rational(parse_rational(text), field.nvars());
    }

   private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(Rational(1), num_.nvars());
            return;
        }
        if (!num_.is_constant() || !den_.is_constant()) {
            Polynomial g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = num_.divide_exact(g);
                den_ = den_.divide_exact(g);
            }
        }
        Rational c = den_.content();
        den_ = den_.divide_by_rational(c);
        num_ = num_.divide_by_rational(c);
    }

    Polynomial num_, den_;
};

}  // namespace flowforms
