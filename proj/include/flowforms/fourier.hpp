#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flowforms/rational.hpp"

namespace flowforms {

// High-precision real used for slope evaluation and small-denominator
// diagnostics; coefficients themselves stay in double per the series contract.
using Real = boost::multiprecision::cpp_bin_float_100;

// Slope of the straight-line flow on T^2, in one of the supported exact
// representations. Rational slopes (including decimal literals and the
// engineered Liouville-type truncations, which are rational) are flagged:
// the inversion denominators can vanish exactly for them.
struct SlopeSpec {
    enum class Kind { decimal, rational, quadratic_surd, liouville };
    Kind kind = Kind::rational;
    Rational rat;  // decimal / rational / liouville exact value
    Int surd_a = 0, surd_b = 0, surd_d = 0, surd_c = 1;  // (a + b*sqrt(d))/c
    int liouville_terms = 0;
    std::string text;

    static SlopeSpec from_rational(const Rational& q, Kind kind = Kind::rational) {
        SlopeSpec s;
        s.kind = kind;
        s.rat = q;
        s.text = flowforms::to_string(q);
        return s;
    }
    static SlopeSpec golden() { return surd(1, 1, 5, 2, "golden"); }
    static SlopeSpec surd(long a, long b, long d, long c, std::string text = "") {
        if (c == 0) throw DomainError("surd slope with zero denominator");
        if (d <= 0) throw DomainError("surd slope needs a positive radicand");
        Int root = boost::multiprecision::sqrt(Int(d));
        if (root * root == Int(d)) throw DomainError("surd radicand is a perfect square");
        if (b == 0) throw DomainError("surd slope with zero irrational part is rational");
        SlopeSpec s;
        s.kind = Kind::quadratic_surd;
        s.surd_a = a;
        s.surd_b = b;
        s.surd_d = d;
        s.surd_c = c;
        if (s.surd_b < 0) {  // normalize to a positive sqrt coefficient
            s.surd_a = -s.surd_a;
            s.surd_b = -s.surd_b;
            s.surd_c = -s.surd_c;
        }
        s.text = text.empty() ? "(" + std::to_string(a) + "+" + std::to_string(b) + "*sqrt(" +
                                    std::to_string(d) + "))/" + std::to_string(c)
                              : std::move(text);
        return s;
    }
    // sum_{k=1..K} 10^{-k!}, truncated at K terms: rational, but with
    // exponentially good rational approximations.
    static SlopeSpec liouville(int terms) {
        if (terms < 1 || terms > 6) throw DomainError("liouville truncation wants 1..6 terms");
        Rational sum(0);
        Int fact(1);
        for (int k = 1; k <= terms; ++k) {
            fact *= k;
            Int den(1);
            for (Int i = 0; i < fact; ++i) den *= 10;
            sum += Rational(1, den);
        }
        SlopeSpec s = from_rational(sum, Kind::liouville);
        s.liouville_terms = terms;
        s.text = "liouville:" + std::to_string(terms);
        return s;
    }

    static SlopeSpec parse(const std::string& in) {
        if (in == "golden") return golden();
        if (in.rfind("liouville", 0) == 0) {
            int k = 4;
            auto colon = in.find(':');
            if (colon != std::string::npos) k = std::stoi(in.substr(colon + 1));
            return liouville(k);
        }
        if (in.rfind("surd:", 0) == 0) {
            long v[4] = {0, 0, 0, 1};
            std::size_t pos = 5;
            for (int i = 0; i < 4; ++i) {
                auto next = in.find(':', pos);
                v[i] = std::stol(in.substr(pos, next - pos));
                if (next == std::string::npos) break;
                pos = next + 1;
            }
            return surd(v[0], v[1], v[2], v[3]);
        }
        if (in.find('.') != std::string::npos) {
            auto dot = in.find('.');
            std::string digits = in.substr(0, dot) + in.substr(dot + 1);
            Int den(1);
            for (std::size_t i = dot + 1; i < in.size(); ++i) den *= 10;
            return from_rational(Rational(parse_int_decimal(digits), den), Kind::decimal);
        }
        return from_rational(parse_rational(in), Kind::rational);
    }

    bool is_rational() const { return kind != Kind::quadratic_surd; }
    std::optional<Rational> exact_rational() const {
        if (is_rational()) return rat;
        return std::nullopt;
    }
    Real value_hp() const {
        if (is_rational())
            return Real(boost::multiprecision::numerator(rat)) /
                   Real(boost::multiprecision::denominator(rat));
        return (Real(surd_a) + Real(surd_b) * boost::multiprecision::sqrt(Real(surd_d))) /
               Real(surd_c);
    }
    double value() const { return value_hp().convert_to<double>(); }
};

// ---------------------------------------------------------------------------
// Continued fractions and Diophantine diagnostics.

struct ConvergentInfo {
    Int p, q;
    double quality;  // |alpha - p/q| * q^2
};

struct DiophantineProfile {
    std::vector<Int> cf;
    std::vector<ConvergentInfo> convergents;
    bool rational = false;   // slope is exactly rational
    bool finite_cf = false;  // expansion terminated before the requested depth
    double irrationality_estimate = 2.0;

    // Best small denominator |q*alpha - p| among convergents with q <= bound.
    double min_denominator(const SlopeSpec& alpha, double bound) const {
        Real a = alpha.value_hp();
        Real best = -1;
        for (const auto& c : convergents) {
            if (Real(c.q) > bound || c.q == 0) continue;
            Real v = boost::multiprecision::abs(Real(c.q) * a - Real(c.p));
            if (best < 0 || v < best) best = v;
        }
        return best < 0 ? -1.0 : best.convert_to<double>();
    }
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline DiophantineProfile diophantine_profile(const SlopeSpec& alpha, int depth) {
    if (depth < 1) throw DomainError("continued fraction depth must be >= 1");
    DiophantineProfile prof;
    std::vector<Int> cf;
    if (alpha.is_rational()) {
        prof.rational = true;
        Int num = boost::multiprecision::numerator(alpha.rat);
        Int den = boost::multiprecision::denominator(alpha.rat);
        while (den != 0 && static_cast<int>(cf.size()) < depth) {
            Int a = floor_div(num, den);
            cf.push_back(a);
            Int rem = num - a * den;
            num = den;
            den = rem;
        }
        prof.finite_cf = den == 0;
    } else {
        // (P + sqrt(D)) / Q with Q | D - P^2, exact integer recurrence
        Int c = alpha.surd_c;
        Int P = alpha.surd_a * boost::multiprecision::abs(c);
        Int Q = c * boost::multiprecision::abs(c);
        Int D = alpha.surd_b * alpha.surd_b * alpha.surd_d * c * c;
        Int s = boost::multiprecision::sqrt(D);  // floor sqrt
        for (int i = 0; i < depth; ++i) {
            // floor((P + sqrt(D))/Q), exact because sqrt(D) is irrational
            Int a = floor_div(2 * (P + s) + 1, 2 * Q);
            cf.push_back(a);
            P = a * Q - P;
            Q = (D - P * P) / Q;
        }
    }
    prof.cf = cf;
    Int pm1(1), pm2(0), qm1(0), qm2(1);  // p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1
    Real a_hp = alpha.value_hp();
    for (const auto& a : cf) {
        Int p = a * pm1 + pm2;
        Int q = a * qm1 + qm2;
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        ConvergentInfo ci;
        ci.p = p;
        ci.q = q;
        Real diff = boost::multiprecision::abs(a_hp - Real(p) / Real(q));
        ci.quality = (diff * Real(q) * Real(q)).convert_to<double>();
        prof.convergents.push_back(ci);
    }
    // |alpha - p_k/q_k| ~ 1/(q_k q_{k+1}); exponent growth of q_{k+1} in q_k
    // estimates the irrationality measure. Denominators below 10 are noise.
    double mu = 2.0;
    for (std::size_t i = 0; i + 1 < prof.convergents.size(); ++i) {
        double lq = std::log(prof.convergents[i].q.convert_to<double>());
        double lq1 = std::log(prof.convergents[i + 1].q.convert_to<double>());
        if (lq > 2.3) mu = std::max(mu, 1.0 + lq1 / lq);
    }
    prof.irrationality_estimate = mu;
    return prof;
}

// Scan n = 1..N for the distance of alpha*n to the nearest integer: the box
// minimum of |m + alpha n| and the fitted constant min |m + alpha n| * |n|.
// The fit skips n < 10: the law is asymptotic and the first few denominators
// sit below the Hurwitz constant even for the golden ratio.
struct SmallDenominatorScan {
    long best_n = 0;
    long best_m = 0;
    double min_abs = 0;
    double fitted_c = 0;
};

inline SmallDenominatorScan small_denominator_scan(const SlopeSpec& alpha, long N) {
    Real a = alpha.value_hp();
    SmallDenominatorScan out;
    const long fit_from = N >= 20 ? 10 : 1;
    Real best = -1, bestc = -1;
    for (long n = 1; n <= N; ++n) {
        Real x = a * n;
        Real r = boost::multiprecision::round(x);
        Real dist = boost::multiprecision::abs(x - r);
        if (best < 0 || dist < best) {
            best = dist;
            out.best_n = n;
            out.best_m = -r.convert_to<long>();
        }
        Real c = dist * n;
        if (n >= fit_from && (bestc < 0 || c < bestc)) bestc = c;
    }
    out.min_abs = best.convert_to<double>();
    out.fitted_c = bestc.convert_to<double>();
    return out;
}

// ---------------------------------------------------------------------------
// Finite Fourier series on Z^2 and the cohomological equation
// (d/dx + alpha d/dy) f = g, inverted frequency-wise.

struct FourierSeries {
    std::map<std::pair<long, long>, std::complex<double>> terms;
    bool real_valued = false;

    void set(long m, long n, std::complex<double> z) {
        if (z == std::complex<double>(0.0, 0.0)) return;
        terms[{m, n}] = z;
    }
    std::complex<double> at(long m, long n) const {
        auto it = terms.find({m, n});
        return it == terms.end() ? std::complex<double>(0.0, 0.0) : it->second;
    }

    // conjugate symmetry f(-m,-n) = conj(f(m,n)) up to tol
    bool conjugate_symmetric(double tol = 0.0) const {
        for (const auto& [k, z] : terms) {
            auto w = at(-k.first, -k.second);
            if (std::abs(w - std::conj(z)) > tol) return false;
        }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, z] : terms)
            arr.push_back({{"m", k.first}, {"n", k.second}, {"re", z.real()}, {"im", z.imag()}});
        return {{"real_valued", real_valued}, {"terms", arr}};
    }
    static FourierSeries from_json(const nlohmann::json& j) {
        FourierSeries s;
        const nlohmann::json* arr = &j;
        if (j.is_object()) {
            s.real_valued = j.value("real_valued", false);
            arr = &j.at("terms");
        }
        for (const auto& t : *arr)
            s.set(t.at("m").get<long>(), t.at("n").get<long>(),
                  {t.at("re").get<double>(), t.value("im", 0.0)});
        return s;
    }
    static FourierSeries load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open series file: " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("series file is not valid JSON: ") + e.what());
        }
        return from_json(j);
    }
};

// The (0,0) coefficient: the solvability obstruction (the mean of g).
inline std::complex<double> obstruction(const FourierSeries& g) { return g.at(0, 0); }

struct SolveDiagnostics {
    double min_denominator = 0;  // min |m + alpha n| over the support, excluding (0,0)
    long min_m = 0, min_n = 0;
    double max_amplification = 0;  // max |f_{m,n}| / |g_{m,n}|
    std::complex<double> obstruction{0.0, 0.0};
    bool mean_subtracted = false;
    double residual = 0;
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Eigenvalue of A = d/dx + alpha d/dy on exp(2 pi i (mx + ny)) is
// 2 pi i (m + alpha n); this helper returns the real factor m + alpha n.
inline double denominator_value(const SlopeSpec& alpha, long m, long n) {
    return (Real(m) + alpha.value_hp() * n).convert_to<double>();
}

inline std::pair<FourierSeries, SolveDiagnostics> solve_cohomological(const SlopeSpec& alpha,
                                                                      const FourierSeries& g,
                                                                      bool subtract_mean = false) {
    SolveDiagnostics diag;
    diag.obstruction = obstruction(g);
    if (diag.obstruction != std::complex<double>(0.0, 0.0)) {
        if (!subtract_mean)
            throw ObstructionError("nonzero obstruction (mean) " +
                                   std::to_string(diag.obstruction.real()) + "+" +
                                   std::to_string(diag.obstruction.imag()) +
                                   "i; pass subtract_mean to project it away");
        diag.mean_subtracted = true;
    }
    auto exact = alpha.exact_rational();
    FourierSeries f;
    f.real_valued = g.real_valued && std::abs(diag.obstruction.imag()) == 0.0;
    bool have_min = false;
    for (const auto& [k, z] : g.terms) {
        const auto [m, n] = k;
        if (m == 0 && n == 0) continue;
        if (exact) {
            // m + (p/q) n = 0 exactly iff q m + p n = 0
            Int p = boost::multiprecision::numerator(*exact);
            Int q = boost::multiprecision::denominator(*exact);
            if (q * m + p * n == 0)
                throw ResonanceError(m, n,
                                     "resonant frequency (" + std::to_string(m) + "," +
                                         std::to_string(n) + "): m + alpha n = 0 exactly");
        }
        const double t = denominator_value(alpha, m, n);
        if (t == 0.0)
            throw ResonanceError(m, n, "denominator underflow at frequency (" + std::to_string(m) +
                                           "," + std::to_string(n) + ")");
        const std::complex<double> denom(0.0, kTwoPi * t);
        const std::complex<double> val = z / denom;
        f.set(m, n, val);
        const double at = std::abs(t);
        if (!have_min || at < diag.min_denominator) {
            diag.min_denominator = at;
            diag.min_m = m;
            diag.min_n = n;
            have_min = true;
        }
        if (std::abs(z) > 0) diag.max_amplification = std::max(diag.max_amplification, std::abs(val) / std::abs(z));
    }
    return {f, diag};
}

// max over the union support of |2 pi i (m + alpha n) f_{m,n} - g_{m,n}|
inline double residual(const SlopeSpec& alpha, const FourierSeries& f, const FourierSeries& g) {
    double worst = 0;
    auto visit = [&](long m, long n) {
        const std::complex<double> denom(0.0, kTwoPi * denominator_value(alpha, m, n));
        worst = std::max(worst, std::abs(denom * f.at(m, n) - g.at(m, n)));
    };
    for (const auto& [k, z] : f.terms) visit(k.first, k.second);
    for (const auto& [k, z] : g.terms)
        if (f.terms.find(k) == f.terms.end()) visit(k.first, k.second);
    return worst;
}

}  // namespace flowforms
