#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowforms/rational.hpp"

namespace flowforms {

// Multivariate polynomial over Q with a fixed number of variables.
// Terms are kept in a map ordered lexicographically on the exponent vector,
// so the representation is canonical and equality is structural.
class Polynomial {
   public:
    using Expo = std::vector<std::uint32_t>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(Rational c, std::size_t nvars) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Expo(nvars, 0)] = std::move(c);
        return p;
    }
    static Polynomial variable(std::size_t index, std::size_t nvars) {
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e.at(index) = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_expo(terms_.begin()->first));
    }
    // Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_[e] = k * c;
        return r;
    }

    Polynomial pow(unsigned int k) const {
        Polynomial r = constant(Rational(1), nvars_);
        for (unsigned int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }
    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    // Highest variable index actually occurring, or nullopt for a constant.
    std::optional<std::size_t> top_variable() const {
        std::optional<std::size_t> v;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0 && (!v || i > *v)) v = i;
        return v;
    }

    // Signed rational content: the value c with p/c integer-primitive and
    // positive leading (lex-largest) coefficient. content(0) = 0.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        Int g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = gcd_int(g, boost::multiprecision::numerator(c));
            l = lcm_int(l, boost::multiprecision::denominator(c));
        }
        Rational r(g, l);
        if (terms_.rbegin()->second < 0) r = -r;
        return r;
    }
    Polynomial primitive_part() const {
        if (terms_.empty()) return *this;
        return divide_by_rational(content());
    }
    Polynomial divide_by_rational(const Rational& c) const {
        Polynomial r(nvars_);
        for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
        return r;
    }

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Polynomial> try_divide(const Polynomial& b) const {
        if (b.is_zero()) return std::nullopt;
        Polynomial rem = *this;
        Polynomial quot(nvars_);
        const auto& bl = *b.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& rl = *rem.terms_.rbegin();
            Expo q(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (rl.first[i] < bl.first[i]) return std::nullopt;
                q[i] = rl.first[i] - bl.first[i];
            }
            Rational qc = rl.second / bl.second;
            Polynomial t(nvars_);
            t.terms_[q] = qc;
            quot = quot + t;
            rem = rem - t * b;
        }
        return quot;
    }
    Polynomial divide_exact(const Polynomial& b) const {
        auto q = try_divide(b);
        if (!q) throw Error("internal: inexact polynomial division");
        return *q;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            std::string sign = c < 0 ? "-" : "+";
            if (c < 0) c = -c;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : ("x" + std::to_string(i));
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            std::string coeff = flowforms::to_string(c);
            std::string term;
            if (mono.empty())
                term = coeff;
            else if (c == 1)
                term = mono;
            else
                term = coeff + "*" + mono;
            if (first) {
                out += (sign == "-" ? "-" : "") + term;
                first = false;
            } else {
                out += " " + sign + " " + term;
            }
        }
        return out;
    }

   private:
    static bool is_zero_expo(const Expo& e) {
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }
    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    std::map<Expo, Rational> terms_;
};

namespace detail {

// View of p as a univariate polynomial in variable v: degree -> coefficient
// polynomial (with zero exponent at v).
inline std::map<std::uint32_t, Polynomial> univariate_in(const Polynomial& p, std::size_t v) {
    std::map<std::uint32_t, Polynomial> res;
    for (const auto& [e, c] : p.terms()) {
        auto e2 = e;
        std::uint32_t d = e2[v];
        e2[v] = 0;
        auto it = res.find(d);
        if (it == res.end()) it = res.emplace(d, Polynomial(p.nvars())).first;
        Polynomial mono = Polynomial::constant(Rational(1), p.nvars());
        for (std::size_t i = 0; i < e2.size(); ++i)
            for (std::uint32_t k = 0; k < e2[i]; ++k) mono = mono * Polynomial::variable(i, p.nvars());
        it->second = it->second + mono * c;
    }
    return res;
}

inline Polynomial from_univariate(const std::map<std::uint32_t, Polynomial>& u, std::size_t v,
                                  std::size_t nvars) {
    Polynomial r(nvars);
    Polynomial x = Polynomial::variable(v, nvars);
    for (const auto& [d, coeff] : u) {
        Polynomial m = coeff;
        for (std::uint32_t k = 0; k < d; ++k) m = m * x;
        r = r + m;
    }
    return r;
}

inline std::uint32_t deg_in(const Polynomial& p, std::size_t v) { return p.degree_in(v); }

inline Polynomial leading_coeff_in(const Polynomial& p, std::size_t v) {
    auto u = univariate_in(p, v);
    if (u.empty()) return Polynomial(p.nvars());
    return u.rbegin()->second;
}

// x^e in variable v.
inline Polynomial var_power(std::size_t v, std::uint32_t e, std::size_t nvars) {
    Polynomial r = Polynomial::constant(Rational(1), nvars);
    for (std::uint32_t k = 0; k < e; ++k) r = r * Polynomial::variable(v, nvars);
    return r;
}

// Pseudo-remainder of a by b with respect to v (b with positive degree in v).
// Leading terms cancel exactly, so the degree in v strictly drops each round.
inline Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::size_t v) {
    const std::uint32_t db = deg_in(b, v);
    const Polynomial lb = leading_coeff_in(b, v);
    while (!a.is_zero() && deg_in(a, v) >= db) {
        const std::uint32_t da = deg_in(a, v);
        const Polynomial la = leading_coeff_in(a, v);
        a = a * lb - b * (la * var_power(v, da - db, a.nvars()));
    }
    return a;
}

}  // namespace detail

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

// gcd of the coefficients of p viewed as univariate in v, with an early exit
// once the fold hits a constant.
inline Polynomial content_in(const Polynomial& p, std::size_t v) {
    auto u = univariate_in(p, v);
    Polynomial g(p.nvars());
    for (const auto& [d, c] : u) {
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

}  // namespace detail

// Primitive (integer-content-free, positive leading coefficient) gcd over
// Q[x_0..x_{n-1}], by recursion on the top variable with a primitive PRS.
// Every intermediate is stripped to its primitive part: pseudo-remainders
// otherwise square their coefficient sizes at each step.
inline Polynomial poly_gcd(const Polynomial& a0, const Polynomial& b0) {
    if (a0.is_zero()) return b0.is_zero() ? b0 : b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    if (a0.is_constant() || b0.is_constant())
        return Polynomial::constant(Rational(1), a0.nvars());
    Polynomial a = a0.primitive_part();
    Polynomial b = b0.primitive_part();

    const std::size_t v = std::max(*a.top_variable(), *b.top_variable());
    if (a.degree_in(v) == 0) return poly_gcd(detail::content_in(b, v), a);
    if (b.degree_in(v) == 0) return poly_gcd(detail::content_in(a, v), b);

    Polynomial ca = detail::content_in(a, v);
    Polynomial cb = detail::content_in(b, v);
    Polynomial pa = a.divide_exact(ca).primitive_part();
    Polynomial pb = b.divide_exact(cb).primitive_part();
    if (detail::deg_in(pa, v) < detail::deg_in(pb, v)) std::swap(pa, pb);

    Polynomial g(a.nvars());
    while (true) {
        Polynomial r = detail::pseudo_rem(pa, pb, v);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (detail::deg_in(r, v) == 0) {
            g = Polynomial::constant(Rational(1), a.nvars());
            break;
        }
        pa = pb;
        r = r.primitive_part();
        pb = r.divide_exact(detail::content_in(r, v)).primitive_part();
    }
    Polynomial result = (poly_gcd(ca, cb) * g).primitive_part();
    if (!a0.try_divide(result) || !b0.try_divide(result))
        throw Error("internal: polynomial gcd verification failed");
    return result;
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
    return (a * b).divide_exact(poly_gcd(a, b)).primitive_part();
}

}  // namespace flowforms
