// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "flowforms/builtin_models.hpp"
#include "flowforms/fourier.hpp"
#include "flowforms/properties.hpp"
#include "flowforms/sequences.hpp"
#include "flowforms/sl2_numeric.hpp"

using namespace flowforms;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

long binom(long a, long b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

}  // namespace

int main() {
    criterion(1, "torus basic/invariant cohomology dimensions, n = 2..6", 5.0, [](std::string& d) {
        for (int n = 2; n <= 6; ++n) {
            auto m = make_torus(n);
            for (int k = 0; k <= n; ++k) {
                if (static_cast<long>(basic_cohomology(m, k).dim()) != binom(n - 1, k)) {
                    d = "basic mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
                if (static_cast<long>(invariant_cohomology(m, k).dim()) != binom(n, k)) {
                    d = "invariant mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(2, "theorem-1 exactness on torus models, n = 2..5, k = -1..n-1", 10.0,
              [](std::string& d) {
                  for (int n = 2; n <= 5; ++n) {
                      auto m = make_torus(n);
                      for (int k = -1; k <= n - 1; ++k) {
                          auto rep = build_theorem1(m, k);
                          if (!rep.long_form.all_exact || rep.long_form.alternating_sum != 0) {
                              d = "failure at n=" + std::to_string(n) + " k=" + std::to_string(k);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(3, "proposition 1: dim H^n_X = dim C^{n-1}_X in every built-in model", 0,
              [](std::string& d) {
                  for (const auto& m :
                       {make_torus(2), make_torus(3), make_torus(4), make_sl2(Sl2Flow::geodesic),
                        make_sl2(Sl2Flow::horocycle_plus), make_sl2(Sl2Flow::horocycle_minus),
                        make_flat_symplectic_torus(4)}) {
                      auto p = proposition1_check(m);
                      if (!p.equal) {
                          d = "mismatch in " + m.name;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "sl2 geodesic profile: H_inv, H(M/X), basic 1-forms, H^2_C, d_C^2", 1.0,
              [](std::string& d) {
                  auto m = make_sl2(Sl2Flow::geodesic);
                  std::vector<long> inv, basic;
                  for (int k = 0; k <= 3; ++k) {
                      inv.push_back(static_cast<long>(invariant_cohomology(m, k).dim()));
                      basic.push_back(static_cast<long>(basic_cohomology(m, k).dim()));
                  }
                  if (inv != std::vector<long>{1, 0, 0, 1}) { d = "H_inv"; return false; }
                  if (basic != std::vector<long>{1, 0, 1, 0}) { d = "H(M/X)"; return false; }
                  if (subspace_basic(m, 1).dim() != 0) { d = "Lambda^1(M/X)"; return false; }
                  auto cc = cokernel_complex(m);
                  if (!cc.d_squared_zero) { d = "d_C^2"; return false; }
                  if (cc.h_dims[2] != 1) { d = "H^2_C"; return false; }
                  return true;
              });

    criterion(5, "sl2 horocycle profile: basic cohomology, Jordan cell, derived H_C", 0,
              [](std::string& d) {
                  for (auto flow : {Sl2Flow::horocycle_plus, Sl2Flow::horocycle_minus}) {
                      auto m = make_sl2(flow, 2);
                      if (basic_cohomology(m, 0).dim() != 1 || basic_cohomology(m, 1).dim() != 0 ||
                          basic_cohomology(m, 2).dim() != 0) {
                          d = "basic cohomology of " + m.name;
                          return false;
                      }
                      auto prof = lie_nilpotency_profile(m, 1);
                      if (prof.power_ranks != std::vector<std::size_t>{2, 1, 0} ||
                          !prof.single_jordan_cell) {
                          d = "Jordan profile of " + m.name;
                          return false;
                      }
                      for (long g : {1L, 2L, 5L}) {
                          auto rep = build_theorem2(make_sl2(flow, g));
                          if (!rep.h_C_dims[0] || *rep.h_C_dims[0] != 2 * g ||
                              !rep.h_C_dims[1] || *rep.h_C_dims[1] != 2 * g ||
                              !rep.h_C_dims[2] || *rep.h_C_dims[2] != 1) {
                              d = "derived H_C of " + m.name + " at g=" + std::to_string(g);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(6, "corollary-1 index calculus for g = 1..10", 0, [](std::string& d) {
        for (long g = 1; g <= 10; ++g) {
            auto prof = corollary1_profile(g, g == 1 ? std::optional<long>(1) : std::nullopt);
            if (-prof.h_star.index != 2 - 2 * g || prof.h_star.kernel != 2 * g - 1 ||
                prof.h_star.cokernel != 1) {
                d = "index data at g=" + std::to_string(g);
                return false;
            }
            if (prof.infinite_dimensional != (g >= 2)) {
                d = "infinite-dimensionality verdict at g=" + std::to_string(g);
                return false;
            }
            if (g == 1 && (!prof.derived_C0 || *prof.derived_C0 != 1)) {
                d = "derived dim C^0 at g=1";
                return false;
            }
        }
        auto sym = corollary1_profile(1);
        if (sym.constraint != "dim C^0_X = dim Coker(nabla^0_X)") {
            d = "symbolic constraint at g=1";
            return false;
        }
        return true;
    });

    criterion(7, "theorem-2 index identity on fully model-computed models", 0, [](std::string& d) {
        for (int n = 2; n <= 4; ++n) {
            auto rep = build_theorem2(make_torus(n));
            if (!rep.index_identity_checked || !rep.index_identity_holds || !rep.ladder.all_exact) {
                d = "torus(" + std::to_string(n) + ")";
                return false;
            }
        }
        auto flat = build_theorem2(make_flat_symplectic_torus(4));
        if (!flat.index_identity_holds || !flat.ladder.all_exact) {
            d = "flat-symplectic-torus(4)";
            return false;
        }
        return true;
    });

    criterion(8, "operator-table diff: no mismatches, flips only on hedged entries", 0,
              [](std::string& d) {
                  for (auto flow : {Sl2Flow::geodesic, Sl2Flow::horocycle_plus}) {
                      auto m = make_sl2(flow);
                      auto rep = derive_operator_tables(m);
                      if (rep.mismatches != 0) {
                          d = "mismatches in " + m.name;
                          return false;
                      }
                      for (const auto& diff : rep.diffs)
                          if (diff.status == DiffStatus::sign_flip && !diff.ambiguous_sign) {
                              d = "unhedged sign flip in " + m.name + ": " + diff.description;
                              return false;
                          }
                      if (!rep.pass) {
                          d = "table verdict in " + m.name;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "fourier round trip, resonance detection, Liouville dichotomy", 10.0,
              [](std::string& d) {
                  auto gold = SlopeSpec::golden();
                  std::mt19937_64 rng(2024);
                  std::uniform_int_distribution<long> freq(-64, 64);
                  std::uniform_real_distribution<double> amp(-2.0, 2.0);
                  for (int t = 0; t < 200; ++t) {
                      FourierSeries g;
                      g.real_valued = true;
                      for (int w = 0; w < 25; ++w) {
                          long m = freq(rng), n = freq(rng);
                          if (m == 0 && n == 0) continue;
                          std::complex<double> z(amp(rng), amp(rng));
                          g.set(m, n, z);
                          g.set(-m, -n, std::conj(z));
                      }
                      auto [f, diag] = solve_cohomological(gold, g);
                      if (residual(gold, f, g) >= 1e-12) {
                          d = "residual too large on series " + std::to_string(t);
                          return false;
                      }
                  }
                  bool resonated = false;
                  try {
                      FourierSeries bad;
                      bad.set(1, -2, {1.0, 0.0});
                      solve_cohomological(SlopeSpec::parse("1/2"), bad);
                  } catch (const ResonanceError&) {
                      resonated = true;
                  }
                  if (!resonated) {
                      d = "rational resonance not detected";
                      return false;
                  }
                  auto gp = diophantine_profile(gold, 35);
                  auto lio = SlopeSpec::liouville(4);
                  auto lp = diophantine_profile(lio, 40);
                  double gmin = gp.min_denominator(gold, 1e6);
                  double lmin = lp.min_denominator(lio, 1e6);
                  if (!(lmin < gmin / 1e3)) {
                      d = "Liouville profile not 1e3 times below the golden profile";
                      return false;
                  }
                  return true;
              });

    criterion(10, "numeric cross-checks: Lie derivatives, periods, brackets, Maurer-Cartan", 0,
              [](std::string& d) {
                  auto geo = make_sl2(Sl2Flow::geodesic);
                  auto hp = make_sl2(Sl2Flow::horocycle_plus);
                  auto hm = make_sl2(Sl2Flow::horocycle_minus);
                  for (int k = 1; k <= 3; ++k) {
                      if (numeric_lie_check(geo, FlowKind::geodesic, k, 5).max_deviation >= 1e-6) {
                          d = "geodesic lie check degree " + std::to_string(k);
                          return false;
                      }
                      if (numeric_lie_check(hp, FlowKind::horocycle_plus, k, 5).max_deviation >=
                          1e-6) {
                          d = "horocycle-plus lie check degree " + std::to_string(k);
                          return false;
                      }
                      if (numeric_lie_check(hm, FlowKind::horocycle_minus, k, 5).max_deviation >=
                          1e-6) {
                          d = "horocycle-minus lie check degree " + std::to_string(k);
                          return false;
                      }
                  }
                  auto conv = numeric_lie_check(geo, FlowKind::geodesic, 1, 23);
                  if (conv.ratio_samples == 0 || conv.min_ratio <= 3.5 || conv.max_ratio >= 4.5) {
                      d = "convergence order below 2";
                      return false;
                  }
                  for (double t : {1.0, 2.0, 4.0}) {
                      auto p = closed_geodesic_period(Mat2::diag(std::exp(t / 2), std::exp(-t / 2)));
                      if (p.deviation >= 1e-9) {
                          d = "period deviation at t=" + std::to_string(t);
                          return false;
                      }
                  }
                  if (!bracket_check(AlgebraBasis::standard()).pass) {
                      d = "bracket table";
                      return false;
                  }
                  if (maurer_cartan_check(geo, 5).max_deviation >= 1e-8) {
                      d = "Maurer-Cartan consistency";
                      return false;
                  }
                  return true;
              });

    criterion(11, "algebraic property suite, >=100 random pairs per model", 0, [](std::string& d) {
        for (const auto& m :
             {make_torus(2), make_torus(3), make_torus(4), make_sl2(Sl2Flow::geodesic),
              make_sl2(Sl2Flow::horocycle_plus), make_sl2(Sl2Flow::horocycle_minus),
              make_flat_symplectic_torus(4)}) {
            auto r = run_property_suite(m, 99, 100);
            if (!r.pass) {
                d = m.name + ": " + (r.failed_checks.empty() ? "failures" : r.failed_checks[0]);
                return false;
            }
        }
        return true;
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
