#pragma once

/**
 * Named verification checks, grouped into suites, each reporting a maximum
 * residual against a fixed tolerance.  Used by `leafkernel verify`.
 *
 * Sample sets are deterministic (fixed-seed mt19937_64), so two runs print
 * the same residuals.
 */

#include <leafkernel/core.hpp>
#include <leafkernel/identities.hpp>
#include <leafkernel/ode_oracle.hpp>
#include <leafkernel/reference_table.hpp>
#include <leafkernel/symbolic.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace leaf::verify {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::string> details;  // printed under the check line
};

enum class Suite { identities, symbolic, oracle, all };

inline CheckResult make_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual <= tolerance, {}};
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Sample sets
// ---------------------------------------------------------------------------

inline std::vector<double> uniform_samples(std::size_t count, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (auto& v : out) v = dist(rng);
  return out;
}

/// 40 points over [−3π₃, 3π₃], offset so none sits on a branch boundary.
inline std::vector<double> addition_grid_axis() {
  const double pi3 = period_constants(3).pi_n;
  std::vector<double> out;
  for (int j = 0; j < 40; ++j) out.push_back(pi3 * (-3.0 + 0.15 * (j + 0.5)));
  return out;
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

inline CheckResult check_worked_example_squared() {
  const double v = sleaf3_add_squared(0.2, 0.3);
  return make_check("sleaf3_add_squared(0.2,0.3) = " + format_fixed(v, 7), std::abs(v - 0.2494431), 1e-6);
}

inline CheckResult check_worked_example_signed() {
  const double v = sleaf3_add(0.2, 0.3);
  return make_check("sleaf3_add(0.2,0.3) = " + format_fixed(v, 5), std::abs(v - 0.49944), 1e-5);
}

inline CheckResult check_reference_table() {
  double worst = 0.0;
  std::vector<std::string> diffs;
  for (const auto& row : kReferenceTable) {
    const double s = sleaf(3, row.l).r;
    const double c = cleaf(3, row.l).r;
    const double e = std::max(std::abs(s - row.sleaf), std::abs(c - row.cleaf));
    worst = std::max(worst, e);
    if (e > kReferenceTableTolerance)
      diffs.push_back("l=" + format_fixed(row.l, 1) + "  table " + format_fixed(row.sleaf, 6) + " " +
                      format_fixed(row.cleaf, 6) + "  computed " + format_fixed(s, 6) + " " + format_fixed(c, 6));
  }
  auto out = make_check("reference table (84 values)", worst, kReferenceTableTolerance);
  out.details = std::move(diffs);
  return out;
}

inline CheckResult check_pythagorean() {
  double worst = 0.0;
  for (double l : uniform_samples(1000, -10.0, 10.0, 11)) {
    const double s = sleaf(3, l).r;
    const double c = cleaf(3, l).r;
    worst = std::max(worst, std::abs(s * s + c * c + 2.0 * s * s * c * c - 1.0));
  }
  return make_check("s^2 + c^2 + 2s^2c^2 = 1 (1000 samples)", worst, 1e-11);
}

inline CheckResult check_energy() {
  double worst = 0.0;
  for (double l : uniform_samples(1000, -10.0, 10.0, 12)) {
    for (int n = 1; n <= 3; ++n) {
      const auto v = sleaf(n, l);
      worst = std::max(worst, std::abs(v.dr * v.dr + std::pow(v.r, 2 * n) - 1.0));
      const auto c = cleaf(n, l);
      worst = std::max(worst, std::abs(c.dr * c.dr + std::pow(c.r, 2 * n) - 1.0));
    }
  }
  return make_check("energy dr^2 + r^2n = 1", worst, 1e-10);
}

inline CheckResult check_sleaf_double() {
  const double pi3 = period_constants(3).pi_n;
  double worst = 0.0;
  for (double l : uniform_samples(400, -2.0 * pi3, 2.0 * pi3, 13))
    worst = std::max(worst, std::abs(sleaf3_double(l) - sleaf(3, 2.0 * l).r));
  return make_check("sleaf3 double angle (400 samples)", worst, 1e-10);
}

inline CheckResult check_cleaf_double() {
  const double pi3 = period_constants(3).pi_n;
  double worst = 0.0;
  for (double l : uniform_samples(400, -2.0 * pi3, 2.0 * pi3, 14))
    worst = std::max(worst, std::abs(cleaf3_double(l) - cleaf(3, 2.0 * l).r));
  return make_check("cleaf3 double angle (400 samples)", worst, 1e-10);
}

inline CheckResult check_sleaf_addition() {
  double worst = 0.0;
  const auto axis = addition_grid_axis();
  for (double l1 : axis)
    for (double l2 : axis) {
      const double s = sleaf(3, l1 + l2).r;
      worst = std::max(worst, std::abs(sleaf3_add_squared(l1, l2) - s * s));
    }
  return make_check("sleaf3 addition, 40x40 case grid", worst, 1e-9);
}

inline CheckResult check_cleaf_addition() {
  double worst = 0.0;
  const auto axis = addition_grid_axis();
  for (double l1 : axis)
    for (double l2 : axis) {
      const double c = cleaf(3, l1 + l2).r;
      worst = std::max(worst, std::abs(cleaf3_add_squared(l1, l2) - c * c));
    }
  return make_check("cleaf3 addition, 40x40 case grid", worst, 1e-9);
}

/// The two alternative cross terms must disagree with direct evaluation.
inline CheckResult check_cleaf_cross_term_arbitration() {
  double best_alternative = std::numeric_limits<double>::infinity();
  const auto axis = addition_grid_axis();
  for (auto form : {CleafCrossTerm::s1_c2, CleafCrossTerm::mixed}) {
    double worst = 0.0;
    for (double l1 : axis)
      for (double l2 : axis) {
        const double c = cleaf(3, l1 + l2).r;
        worst = std::max(worst, std::abs(cleaf3_add_squared(l1, l2, form) - c * c));
      }
    best_alternative = std::min(best_alternative, worst);
  }
  // Inverted sense: passes when every alternative is off by more than 1e-3.
  CheckResult out{"cleaf3 cross-term alternatives rejected", best_alternative, 1e-3, best_alternative > 1e-3, {}};
  out.details.push_back("smallest max error among alternatives must exceed the tolerance");
  return out;
}

inline CheckResult check_addition_degenerates_to_double() {
  double worst = 0.0;
  for (double l : uniform_samples(400, -5.0, 5.0, 15)) {
    const double d = sleaf3_double(l);
    worst = std::max(worst, std::abs(sleaf3_add_squared(l, l) - d * d));
  }
  return make_check("sleaf3 addition at l1 = l2 matches double angle", worst, 1e-10);
}

inline CheckResult check_trig_degeneration() {
  double worst = 0.0;
  for (double l : uniform_samples(1000, -10.0, 10.0, 16)) {
    worst = std::max(worst, std::abs(sleaf(1, l).r - std::sin(l)));
    worst = std::max(worst, std::abs(cleaf(1, l).r - std::cos(l)));
  }
  return make_check("n=1 equals sin/cos on [-10,10]", worst, 1e-12);
}

inline CheckResult check_lemniscate_addition() {
  const double quarter = period_constants(2).half_pi_n;
  const auto a = uniform_samples(200, 0.0, quarter, 17);
  const auto b = uniform_samples(200, 0.0, quarter, 18);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(sl_add(a[i], b[i]) - sleaf(2, a[i] + b[i]).r));
  return make_check("n=2 addition formula on the principal branch", worst, 1e-10);
}

/// ∂g/∂l1 = ∂g/∂l2 by central differences, h = 1e−5, away from g = 0.
inline CheckResult check_g_derivatives_match() {
  const double h = 1e-5;
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    const double l1 = dist(rng), l2 = dist(rng);
    if (addition_g(l1, l2) < 1e-2) continue;
    const double d1 = (addition_g(l1 + h, l2) - addition_g(l1 - h, l2)) / (2 * h);
    const double d2 = (addition_g(l1, l2 + h) - addition_g(l1, l2 - h)) / (2 * h);
    worst = std::max(worst, std::abs(d1 - d2));
    ++accepted;
  }
  return make_check("dg/dl1 = dg/dl2 (100 pairs, h=1e-5)", worst, 1e-6);
}

inline CheckResult check_g_shift_invariance() {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double l1 = dist(rng), l2 = dist(rng);
    worst = std::max(worst, std::abs(addition_g(l1, l2) - addition_g(l1 + l2, 0.0)));
  }
  return make_check("g(l1,l2) = g(l1+l2,0) (100 pairs)", worst, 1e-9);
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> identity_checks() {
  return {check_worked_example_squared(),
          check_worked_example_signed(),
          check_reference_table(),
          check_pythagorean(),
          check_energy(),
          check_sleaf_double(),
          check_cleaf_double(),
          check_sleaf_addition(),
          check_cleaf_addition(),
          check_cleaf_cross_term_arbitration(),
          check_addition_degenerates_to_double(),
          check_trig_degeneration(),
          check_lemniscate_addition(),
          check_g_derivatives_match(),
          check_g_shift_invariance()};
}

inline std::vector<CheckResult> symbolic_checks() {
  std::vector<CheckResult> out;
  for (const auto& report : symbolic::verify_all()) {
    auto check = make_check(report.identity + ": residual " + std::to_string(report.difference.term_count()) + " terms",
                            static_cast<double>(report.difference.term_count()), 0.0);
    if (!report.holds()) check.details.push_back("surviving: " + report.difference.to_string());
    out.push_back(std::move(check));
  }

  // Floating-point shadow of the exact numerator identity.
  const auto n1 = symbolic::quotient_numerator(symbolic::derivation_l1());
  const auto closed = symbolic::expanded_numerator();
  double worst = 0.0;
  const auto xs = uniform_samples(200, -1.0, 1.0, 21);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    const double a = xs[i], b = xs[i + 1];
    const std::array<double, symbolic::kGenCount> at{a, b, std::sqrt(1 - std::pow(a, 6)),
                                                     std::sqrt(1 - std::pow(b, 6)), 0.0};
    worst = std::max(worst, std::abs(n1.evaluate(at) - closed.evaluate(at)));
  }
  out.push_back(make_check("numeric shadow of numerator identity", worst, 1e-10));
  return out;
}

inline std::vector<CheckResult> oracle_checks(double tol = 1e-12) {
  std::vector<CheckResult> out;
  const std::array<std::pair<double, double>, 3> digits{{{6.28, 6.29}, {5.24, 5.25}, {4.85, 4.86}}};
  for (int n = 1; n <= 3; ++n) {
    const double quad = period_constants(n).period;
    const double ode = measure_period(n, tol);
    auto check = make_check("period(" + std::to_string(n) + ") quadrature vs ODE", std::abs(quad - ode), 1e-9);
    check.details.push_back("quadrature " + format_fixed(quad, 12) + "  ODE " + format_fixed(ode, 12));
    const auto [lo, hi] = digits[static_cast<std::size_t>(n - 1)];
    if (!(quad >= lo && quad < hi)) {
      check.passed = false;
      check.details.push_back("outside [" + format_fixed(lo, 2) + ", " + format_fixed(hi, 2) + ")");
    }
    out.push_back(std::move(check));
  }

  const auto s_traj = integrate_leaf_ode(3, {0.0, 0.0, 1.0}, 10.0, tol);
  const auto c_traj = integrate_leaf_ode(3, {0.0, 1.0, 0.0}, 10.0, tol);
  double worst_s = 0.0, worst_c = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double l = 10.0 * i / 199.0;
    worst_s = std::max(worst_s, std::abs(s_traj.at(l).r - sleaf(3, l).r));
    worst_c = std::max(worst_c, std::abs(c_traj.at(l).r - cleaf(3, l).r));
  }
  out.push_back(make_check("sleaf3 vs ODE (200 samples on [0,10])", worst_s, 1e-8));
  out.push_back(make_check("cleaf3 vs ODE (200 samples on [0,10])", worst_c, 1e-8));

  const auto long_run = integrate_leaf_ode(3, {0.0, 0.0, 1.0}, 100.0, 1e-12);
  double drift = 0.0;
  for (const auto& s : long_run.states()) drift = std::max(drift, std::abs(energy(3, s) - 1.0));
  out.push_back(make_check("ODE energy drift on [0,100]", drift, 1e-9));
  out.push_back(make_check("ODE amplitude = 1", std::abs(max_amplitude(long_run) - 1.0), 1e-9));
  return out;
}

inline std::vector<CheckResult> run(Suite suite) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  if (suite == Suite::identities || suite == Suite::all) append(identity_checks());
  if (suite == Suite::symbolic || suite == Suite::all) append(symbolic_checks());
  if (suite == Suite::oracle || suite == Suite::all) append(oracle_checks());
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace leaf::verify
