#pragma once

#include <random>
#include <string>
#include <vector>

#include "flowforms/model.hpp"

namespace flowforms {

// Random homogeneous element of a given degree: small integer coefficients,
// with an occasional symbol factor to exercise the function field.
inline FormElement random_form(const FormModel& m, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    FormElement e(m.field);
    for (GenMask mask : m.calc.basis(degree)) {
        int c = coeff(rng);
        if (c == 0) continue;
        Scalar s = Scalar::from_int(c, m.nvars());
        if (m.nvars() > 0 && pick(rng) == 0) {
            std::uniform_int_distribution<int> var(0, static_cast<int>(m.nvars()) - 1);
            s = s * Scalar::symbol(static_cast<std::size_t>(var(rng)), m.nvars());
        }
        e.add_term(mask, s);
    }
    return e;
}

struct PropertySuiteResult {
    int pairs = 0;
    int failures = 0;
    std::vector<std::string> failed_checks;
    bool pass = false;
};

// The algebraic identity suite for one model: matrix-level operator identities
// on every degree, plus randomized elementwise laws on homogeneous pairs.
inline PropertySuiteResult run_property_suite(const FormModel& m, std::uint64_t seed = 1,
                                              int pairs = 100) {
    PropertySuiteResult r;
    r.pairs = pairs;
    const int n = m.dimension();
    auto fail = [&](const std::string& what) {
        ++r.failures;
        if (r.failed_checks.size() < 20) r.failed_checks.push_back(what);
    };

    // matrix identities per degree
    std::vector<Matrix> d(n + 1), ix(n + 1), lie(n + 1);
    for (int k = 0; k <= n; ++k) {
        d[k] = m.calc.operator_matrix(OperatorKind::d, k).mat;
        ix[k] = m.calc.operator_matrix(OperatorKind::contract, k).mat;
        lie[k] = m.calc.operator_matrix(OperatorKind::lie, k).mat;
    }
    for (int k = 0; k <= n; ++k) {
        if (k + 1 <= n && !(d[k + 1] * d[k]).is_zero()) fail("d.d != 0 at degree " + std::to_string(k));
        if (k >= 1 && !(ix[k - 1] * ix[k]).is_zero())
            fail("i_X.i_X != 0 at degree " + std::to_string(k));
        // Cartan: lie_k = d_{k-1} i_k + i_{k+1} d_k
        Matrix cartan(lie[k].rows(), lie[k].cols(), m.nvars());
        if (k >= 1) cartan = d[k - 1] * ix[k];
        if (k + 1 <= n) {
            Matrix second = ix[k + 1] * d[k];
            cartan = k >= 1 ? cartan : second;
            if (k >= 1) {
                for (std::size_t i = 0; i < cartan.rows(); ++i)
                    for (std::size_t j = 0; j < cartan.cols(); ++j) cartan(i, j) += second(i, j);
            }
        }
        if (!(lie[k] - cartan).is_zero()) fail("Cartan identity fails at degree " + std::to_string(k));
        if (k + 1 <= n && !(lie[k + 1] * d[k] - d[k] * lie[k]).is_zero())
            fail("lie.d != d.lie at degree " + std::to_string(k));
        if (k >= 1 && !(lie[k - 1] * ix[k] - ix[k] * lie[k]).is_zero())
            fail("lie.i_X != i_X.lie at degree " + std::to_string(k));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, n);
    for (int t = 0; t < pairs; ++t) {
        const int p = deg(rng), q = deg(rng);
        FormElement a = random_form(m, p, rng);
        FormElement b = random_form(m, q, rng);
        FormElement ab = wedge(a, b), ba = wedge(b, a);
        FormElement signed_ba = (p * q) % 2 == 0 ? ba : -ba;
        if (ab != signed_ba) fail("graded commutativity fails");
        FormElement c = random_form(m, deg(rng), rng);
        if (wedge(wedge(a, b), c) != wedge(a, wedge(b, c))) fail("associativity fails");
        // Leibniz for d and the antiderivation law for i_X
        FormElement da = m.calc.apply_d(a), db = m.calc.apply_d(b);
        FormElement leib = wedge(da, b) + (p % 2 == 0 ? wedge(a, db) : -wedge(a, db));
        if (m.calc.apply_d(ab) != leib) fail("Leibniz rule for d fails");
        FormElement ia = m.calc.contract(a), ib = m.calc.contract(b);
        FormElement anti = wedge(ia, b) + (p % 2 == 0 ? wedge(a, ib) : -wedge(a, ib));
        if (m.calc.contract(ab) != anti) fail("antiderivation law for i_X fails");
        // nabla is a plain derivation, no signs
        if (m.calc.lie(ab) != wedge(m.calc.lie(a), b) + wedge(a, m.calc.lie(b)))
            fail("derivation identity for nabla fails");
        if (!m.calc.apply_d(da).is_zero()) fail("d^2 != 0 on a random element");
        if (!m.calc.contract(ia).is_zero()) fail("i_X^2 != 0 on a random element");
        if (m.calc.lie(a) != m.calc.apply_d(ia) + m.calc.contract(da))
            fail("Cartan formula fails on a random element");
    }
    r.pass = r.failures == 0;
    return r;
}

}  // namespace flowforms
