#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "flowforms/model.hpp"

namespace flowforms {

struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(double x, double y) { return {x, 0, 0, y}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

    Mat2 inverse() const {
        double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

inline Mat2 bracket(const Mat2& x, const Mat2& y) { return x * y - y * x; }

// Basis matrices realizing [E+, E-] = E0, [E0, E±] = ±E±. The nilpotent
// scales solve 2ab = 1.
struct AlgebraBasis {
    Mat2 E0, Ep, Em;

    static AlgebraBasis standard() {
        AlgebraBasis b;
        b.E0 = Mat2::diag(0.5, -0.5);
        b.Ep = {0, 1, 0, 0};
        b.Em = {0, 0, 0.5, 0};
        return b;
    }
    const Mat2& element(std::size_t i) const { return i == 0 ? E0 : (i == 1 ? Ep : Em); }
};

struct BracketCheckResult {
    double max_deviation = 0;
    bool pass = false;
};

inline BracketCheckResult bracket_check(const AlgebraBasis& b, double tol = 1e-14) {
    BracketCheckResult r;
    r.max_deviation = std::max(
        {(bracket(b.Ep, b.Em) - b.E0).max_abs(), (bracket(b.E0, b.Ep) - b.Ep).max_abs(),
         (bracket(b.E0, b.Em) - (-1.0 * b.Em)).max_abs()});
    // degenerate bases satisfy brackets trivially; require a genuine frame
    bool nondegenerate = b.E0.max_abs() > tol && b.Ep.max_abs() > tol && b.Em.max_abs() > tol;
    r.pass = nondegenerate && r.max_deviation < tol;
    return r;
}

enum class FlowKind { geodesic, horocycle_plus, horocycle_minus };

inline std::string to_string(FlowKind k) {
    switch (k) {
        case FlowKind::geodesic: return "geodesic";
        case FlowKind::horocycle_plus: return "horocycle-plus";
        case FlowKind::horocycle_minus: return "horocycle-minus";
    }
    return "?";
}

// The horocycle-(+) flow runs along e_- (its trajectories satisfy
// omega_+ = omega_0 = 0), and symmetrically for horocycle-(-).
inline const Mat2& flow_generator(const AlgebraBasis& b, FlowKind kind) {
    switch (kind) {
        case FlowKind::geodesic: return b.E0;
        case FlowKind::horocycle_plus: return b.Em;
        case FlowKind::horocycle_minus: return b.Ep;
    }
    throw Error("unreachable");
}

// Closed-form one-parameter subgroups: diagonal exponential for the geodesic
// direction, I + tE for the nilpotent directions.
inline Mat2 flow_exp(const AlgebraBasis& b, FlowKind kind, double t) {
    switch (kind) {
        case FlowKind::geodesic: return Mat2::diag(std::exp(t / 2), std::exp(-t / 2));
        case FlowKind::horocycle_plus: return Mat2::identity() + t * b.Em;
        case FlowKind::horocycle_minus: return Mat2::identity() + t * b.Ep;
    }
    throw Error("unreachable");
}

inline Mat2 renormalize(const Mat2& g) {
    double s = std::sqrt(std::abs(g.det()));
    return {g.a / s, g.b / s, g.c / s, g.d / s};
}

// Flows act by left multiplication (they commute with the right action of the
// lattice); the invariant frame is evaluated through the right trivialization
// W = v g^{-1}.
inline Mat2 flow(const Mat2& g, const AlgebraBasis& b, FlowKind kind, double t) {
    return flow_exp(b, kind, t) * g;
}

// Coefficients of the traceless part of W in the basis (E0, Ep, Em).
inline std::array<double, 3> expand_algebra(const Mat2& w) {
    const double half_trace = 0.5 * w.trace();
    const double x = w.a - half_trace;
    return {2 * x, w.b, 2 * w.c};
}

// omega_i evaluated on the tangent vector v at g.
inline double eval_form(std::size_t which, const Mat2& g, const Mat2& v) {
    return expand_algebra(v * g.inverse())[which];
}

// Value of a basis k-form w_{i1}^...^w_{ik} on k tangent vectors: the
// determinant of the pairing matrix.
inline double eval_basis_form(GenMask mask, const Mat2& g, const std::vector<Mat2>& tangents) {
    auto idx = mask_indices(mask);
    const std::size_t k = idx.size();
    if (k != tangents.size()) throw Error("k-form applied to a wrong number of tangents");
    if (k == 0) return 1.0;
    std::vector<std::array<double, 3>> w;
    for (const auto& v : tangents) w.push_back(expand_algebra(v * g.inverse()));
    if (k == 1) return w[0][idx[0]];
    if (k == 2)
        return w[0][idx[0]] * w[1][idx[1]] - w[0][idx[1]] * w[1][idx[0]];
    // k == 3
    const auto& m = w;
    return m[0][idx[0]] * (m[1][idx[1]] * m[2][idx[2]] - m[1][idx[2]] * m[2][idx[1]]) -
           m[0][idx[1]] * (m[1][idx[0]] * m[2][idx[2]] - m[1][idx[2]] * m[2][idx[0]]) +
           m[0][idx[2]] * (m[1][idx[0]] * m[2][idx[1]] - m[1][idx[1]] * m[2][idx[0]]);
}

// Numeric value of a symbolic form from the sl2 model (a rational combination
// of basis monomials) on tangents at g.
inline double eval_symbolic_form(const FormElement& form, const Mat2& g,
                                 const std::vector<Mat2>& tangents) {
    double total = 0;
    for (const auto& [mask, coeff] : form.terms()) {
        const Rational c = coeff.num().constant_value() / coeff.den().constant_value();
        total += c.convert_to<double>() * eval_basis_form(mask, g, tangents);
    }
    return total;
}

inline Mat2 random_group_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraBasis b = AlgebraBasis::standard();
    Mat2 g = (Mat2::identity() + u(rng) * b.Ep) * Mat2::diag(std::exp(u(rng) / 2), 1.0);
    g = g * Mat2::diag(1.0, std::exp(u(rng) / 2));
    g = renormalize(g * (Mat2::identity() + u(rng) * b.Em));
    return g;
}

inline Mat2 random_algebra_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraBasis b = AlgebraBasis::standard();
    return u(rng) * b.E0 + u(rng) * b.Ep + u(rng) * b.Em;
}

struct LieCheckResult {
    double max_deviation = 0;       // |extrapolated finite difference - symbolic| (finer step)
    double min_ratio = 0, max_ratio = 0;  // coarse/fine error ratios where measurable
    int ratio_samples = 0;
    bool pass = false;
};

// Finite-difference Lie derivative of the degree-k basis forms along the flow:
// D(h) = (phi_h^* u - u)/h, Richardson-extrapolated with steps h and h/2, at
// random group points and tangents, compared against the symbolic table.
inline LieCheckResult numeric_lie_check(const FormModel& model, FlowKind kind, int k,
                                        std::uint64_t seed = 1, int samples = 12,
                                        double h = 4e-3, double tol = 1e-6) {
    if (model.kind != "sl2") throw DomainError("numeric_lie_check needs an sl2 model");
    AlgebraBasis basis = AlgebraBasis::standard();
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k) * 977 +
                        static_cast<std::uint64_t>(kind) * 131071);
    LieCheckResult out;

    auto pullback_value = [&](GenMask mask, const Mat2& g, const std::vector<Mat2>& tangents,
                              double step) {
        Mat2 gt = flow(g, basis, kind, step);
        std::vector<Mat2> moved;
        Mat2 e = flow_exp(basis, kind, step);
        for (const auto& v : tangents) moved.push_back(e * v);
        return eval_basis_form(mask, gt, moved);
    };

    bool first_ratio = true;
    for (int s = 0; s < samples; ++s) {
        Mat2 g = random_group_point(rng);
        std::vector<Mat2> tangents;
        for (int i = 0; i < k; ++i) tangents.push_back(random_algebra_element(rng) * g);
        for (GenMask mask : model.calc.basis(k)) {
            const double base = eval_basis_form(mask, g, tangents);
            auto diff = [&](double step) {
                return (pullback_value(mask, g, tangents, step) - base) / step;
            };
            const double Dh = diff(h), Dh2 = diff(h / 2), Dh4 = diff(h / 4);
            const double Eh = 2 * Dh2 - Dh;      // O(h^2) extrapolant
            const double Eh2 = 2 * Dh4 - Dh2;    // same at h/2
            FormElement lie_val = model.calc.lie(
                FormElement::monomial(model.field, mask, Scalar::from_int(1, 0)));
            const double exact = eval_symbolic_form(lie_val, g, tangents);
            out.max_deviation = std::max(out.max_deviation, std::abs(Eh2 - exact));
            const double e_coarse = std::abs(Eh - exact), e_fine = std::abs(Eh2 - exact);
            if (e_coarse > 1e-9 && e_fine > 1e-12) {
                double ratio = e_coarse / e_fine;
                if (first_ratio) {
                    out.min_ratio = out.max_ratio = ratio;
                    first_ratio = false;
                } else {
                    out.min_ratio = std::min(out.min_ratio, ratio);
                    out.max_ratio = std::max(out.max_ratio, ratio);
                }
                ++out.ratio_samples;
            }
        }
    }
    out.pass = out.max_deviation < tol;
    return out;
}

struct DualityCheckResult {
    double max_deviation = 0;
    bool pass = false;
};

// <omega_i, e_j> = delta_ij at random group points.
inline DualityCheckResult duality_check(std::uint64_t seed = 1, int samples = 100,
                                        double tol = 1e-12) {
    AlgebraBasis b = AlgebraBasis::standard();
    std::mt19937_64 rng(seed);
    DualityCheckResult out;
    for (int s = 0; s < samples; ++s) {
        Mat2 g = random_group_point(rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const double v = eval_form(i, g, b.element(j) * g);
                out.max_deviation = std::max(out.max_deviation, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
    }
    out.pass = out.max_deviation < tol;
    return out;
}

struct MaurerCartanResult {
    double max_deviation = 0;
    bool pass = false;
};

// d omega_k (e_i, e_j) computed from the frame formula with a numerically
// differentiated field bracket, compared against the symbolic d-values of the
// model. Ties the numeric realization to the structure constants.
inline MaurerCartanResult maurer_cartan_check(const FormModel& model, std::uint64_t seed = 1,
                                              int samples = 10, double h = 1e-4,
                                              double tol = 1e-8) {
    if (model.kind != "sl2") throw DomainError("maurer_cartan_check needs an sl2 model");
    AlgebraBasis b = AlgebraBasis::standard();
    std::mt19937_64 rng(seed);
    MaurerCartanResult out;
    auto field_flow = [&](std::size_t i, double t) {
        // one-parameter subgroup of the frame field e_i, as a left factor
        if (i == 0) return Mat2::diag(std::exp(t / 2), std::exp(-t / 2));
        if (i == 1) return Mat2::identity() + t * b.Ep;
        return Mat2::identity() + t * b.Em;
    };
    for (int s = 0; s < samples; ++s) {
        Mat2 g = random_group_point(rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                // numeric vector-field bracket [e_i, e_j] at g by central
                // differences of the adjoint push-forward
                Mat2 fp = field_flow(i, h), fm = field_flow(i, -h);
                Mat2 wp = fm * b.element(j) * fp;   // dphi_{-h} e_j(phi_h g) g^{-1}
                Mat2 wm = fp * b.element(j) * fm;
                Mat2 br = (1.0 / (2 * h)) * (wp - wm);
                // e_i(omega_k(e_j)) - e_j(omega_k(e_i)): derivatives of the
                // constant pairing functions, kept for honesty
                for (std::size_t kk = 0; kk < 3; ++kk) {
                    auto pairing = [&](const Mat2& at, std::size_t field_idx) {
                        return eval_form(kk, at, b.element(field_idx) * at);
                    };
                    double term1 = (pairing(field_flow(i, h) * g, j) -
                                    pairing(field_flow(i, -h) * g, j)) /
                                   (2 * h);
                    double term2 = (pairing(field_flow(j, h) * g, i) -
                                    pairing(field_flow(j, -h) * g, i)) /
                                   (2 * h);
                    double numeric = term1 - term2 - eval_form(kk, g, br * g);
                    // symbolic d omega_kk on (e_i, e_j)
                    FormElement dv = model.calc.d_values()[kk];
                    std::vector<Mat2> tangents = {b.element(i) * g, b.element(j) * g};
                    double symbolic = eval_symbolic_form(dv, g, tangents);
                    out.max_deviation = std::max(out.max_deviation, std::abs(numeric - symbolic));
                }
            }
    }
    out.pass = out.max_deviation < tol;
    return out;
}

// Structure constants from the numeric brackets, compared with the symbolic
// d-values through the Maurer-Cartan pairing: coefficient of w_i^w_j in
// d(w_k) must equal the E_k-coefficient of [E_i, E_j].
inline bool bracket_duality_check(const FormModel& model, double tol = 1e-14) {
    if (model.kind != "sl2") throw DomainError("bracket_duality_check needs an sl2 model");
    AlgebraBasis b = AlgebraBasis::standard();
    for (std::size_t k = 0; k < 3; ++k) {
        const FormElement& dv = model.calc.d_values()[k];
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                double c = expand_algebra(bracket(b.element(i), b.element(j)))[k];
                double coeff = 0;
                GenMask mask = (GenMask{1} << i) | (GenMask{1} << j);
                auto it = dv.terms().find(mask);
                if (it != dv.terms().end())
                    coeff = (it->second.num().constant_value() / it->second.den().constant_value())
                                .convert_to<double>();
                if (std::abs(c - coeff) > tol) return false;
            }
    }
    return true;
}

struct PeriodResult {
    double length = 0;
    double integral = 0;
    double deviation = 0;
};

// Period of omega_0 along the closed geodesic represented by a hyperbolic
// element: the translation length 2 arccosh(|tr|/2), recovered by quadrature
// of omega_0 on the geodesic orbit through a point on the axis.
inline PeriodResult closed_geodesic_period(Mat2 h, int quad_intervals = 256) {
    if (std::abs(h.trace()) <= 2.0)
        throw NotHyperbolicError("element is not hyperbolic: |trace| = " +
                                 std::to_string(std::abs(h.trace())));
    if (h.trace() < 0) h = -1.0 * h;  // same element of PSL2
    const double tr = h.trace();
    const double length = 2.0 * std::acosh(tr / 2.0);
    const double lambda = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;

    auto eigenvector = [&](double mu) -> std::array<double, 2> {
        std::array<double, 2> v1 = {h.b, mu - h.a};
        std::array<double, 2> v2 = {mu - h.d, h.c};
        double n1 = std::abs(v1[0]) + std::abs(v1[1]);
        double n2 = std::abs(v2[0]) + std::abs(v2[1]);
        return n1 >= n2 ? v1 : v2;
    };
    auto v1 = eigenvector(lambda), v2 = eigenvector(1.0 / lambda);
    Mat2 P{v1[0], v2[0], v1[1], v2[1]};
    double dt = P.det();
    P.b /= dt;
    P.d /= dt;  // det(P) = 1
    Mat2 g0 = P.inverse();

    AlgebraBasis basis = AlgebraBasis::standard();
    // Simpson quadrature of omega_0(velocity) along the orbit
    const int n = quad_intervals % 2 == 0 ? quad_intervals : quad_intervals + 1;
    const double step = length / n;
    double sum = 0;
    for (int i = 0; i <= n; ++i) {
        const double t = i * step;
        Mat2 gt = renormalize(flow(g0, basis, FlowKind::geodesic, t));
        Mat2 velocity = basis.E0 * gt;
        const double val = eval_form(0, gt, velocity);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * val;
    }
    PeriodResult r;
    r.length = length;
    r.integral = sum * step / 3.0;
    r.deviation = std::abs(r.integral - r.length);
    return r;
}

struct GroupLawResult {
    double max_deviation = 0;
    bool pass = false;
};

// flow(flow(g, s), t) = flow(g, s + t) over |s|, |t| <= 5.
inline GroupLawResult one_parameter_group_check(std::uint64_t seed = 1, int samples = 50,
                                                double tol = 1e-12) {
    AlgebraBasis b = AlgebraBasis::standard();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    GroupLawResult out;
    for (int s = 0; s < samples; ++s) {
        Mat2 g = random_group_point(rng);
        double t1 = u(rng), t2 = u(rng);
        for (FlowKind kind :
             {FlowKind::geodesic, FlowKind::horocycle_plus, FlowKind::horocycle_minus}) {
            Mat2 two_step = flow(flow(g, b, kind, t1), b, kind, t2);
            Mat2 one_step = flow(g, b, kind, t1 + t2);
            out.max_deviation = std::max(out.max_deviation, (two_step - one_step).max_abs());
        }
    }
    out.pass = out.max_deviation < tol;
    return out;
}

}  // namespace flowforms
