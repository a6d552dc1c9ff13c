// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if any
// criterion fails.

#include <leafkernel/identities.hpp>
#include <leafkernel/ode_oracle.hpp>
#include <leafkernel/reference_table.hpp>
#include <leafkernel/symbolic.hpp>

#include "commands.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace leaf;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string residual(double worst, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.3e, tolerance %.0e", worst, tol);
  return buf;
}

std::vector<double> samples(int count, double lo, double hi, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (auto& v : out) v = dist(gen);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void table_reproduction() {
  constexpr double tol = kReferenceTableTolerance;
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream os;
  cli::cmd_table(3, 0.0, 4.1, 0.1, {cli::Format::csv, 6, {}}, os);
  const double elapsed = seconds_since(t0);

  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);  // header
  double worst = 0.0;
  std::size_t compared = 0;
  for (const auto& ref : kReferenceTable) {
    double l = 0, s = 0, c = 0;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "%lf,%lf,%lf", &l, &s, &c) != 3 ||
        std::abs(l - ref.l) > 1e-9)
      break;
    worst = std::max({worst, std::abs(s - ref.sleaf), std::abs(c - ref.cleaf)});
    compared += 2;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu of 84 values, %s, runtime %.3f s", compared, residual(worst, tol).c_str(),
                elapsed);
  report(1, "table reproduction", compared == 84 && worst <= tol && elapsed < 5.0, detail);
}

void worked_example() {
  const double sq = sleaf3_add_squared(0.2, 0.3);
  const double signed_value = sleaf3_add(0.2, 0.3);
  const double e1 = std::abs(sq - 0.2494431);
  const double e2 = std::abs(signed_value - 0.49944);
  char detail[160];
  std::snprintf(detail, sizeof detail, "squared %.7f (|err| %.1e <= 1e-6), signed %.5f (|err| %.1e <= 1e-5)", sq, e1,
                signed_value, e2);
  report(2, "worked addition example", e1 <= 1e-6 && e2 <= 1e-5, detail);
}

void period_claims() {
  const double lo[] = {6.28, 5.24, 4.85};
  bool ok = true;
  double worst_ode = 0.0, worst_beta = 0.0;
  std::string digits;
  for (int n = 1; n <= 3; ++n) {
    const double p = period_constants(n).period;
    ok = ok && p >= lo[n - 1] && p < lo[n - 1] + 0.01;
    worst_ode = std::max(worst_ode, std::abs(p - measure_period(n, 1e-12)));
    worst_beta = std::max(worst_beta, std::abs(p - 4.0 * oracle::beta_half_period(n)));
    char buf[48];
    std::snprintf(buf, sizeof buf, "period(%d) = %.7f, ", n, p);
    digits += buf;
  }
  ok = ok && worst_ode <= 1e-9 && worst_beta <= 1e-12;
  char detail[96];
  std::snprintf(detail, sizeof detail, "quadrature vs ODE %.1e <= 1e-9, vs Beta %.1e", worst_ode, worst_beta);
  report(3, "period claims", ok, digits + detail);
}

void identity_suites() {
  double pyth = 0.0, energy = 0.0, dbl = 0.0, add = 0.0;
  for (double l : samples(1000, -10.0, 10.0, 41)) {
    const auto s = sleaf(3, l);
    const auto c = cleaf(3, l);
    pyth = std::max(pyth, std::abs(s.r * s.r + c.r * c.r + 2 * s.r * s.r * c.r * c.r - 1.0));
    energy = std::max(energy, std::abs(s.dr * s.dr + std::pow(s.r, 6) - 1.0));
  }
  const double pi3 = period_constants(3).pi_n;
  int decreasing = 0;
  for (double l : samples(400, -2 * pi3, 2 * pi3, 42)) {
    dbl = std::max({dbl, std::abs(sleaf3_double(l) - sleaf(3, 2 * l).r),
                    std::abs(cleaf3_double(l) - cleaf(3, 2 * l).r)});
    decreasing += sign_sleaf_prime(l) < 0;
  }
  std::vector<double> axis;
  for (int j = 0; j < 40; ++j) axis.push_back(pi3 * (-3.0 + 0.15 * (j + 0.5)));
  int cases = 0;
  bool seen[2][2][2] = {};
  for (double l1 : axis)
    for (double l2 : axis) {
      const double s = sleaf(3, l1 + l2).r, c = cleaf(3, l1 + l2).r;
      add = std::max({add, std::abs(sleaf3_add_squared(l1, l2) - s * s), std::abs(cleaf3_add_squared(l1, l2) - c * c)});
      bool& flag = seen[sign_sleaf_prime(l1) > 0][sign_sleaf_prime(l2) > 0][sign_cleaf_prime(l1) > 0];
      if (!flag) ++cases;
      flag = true;
    }
  const bool ok = pyth <= 1e-11 && dbl <= 1e-10 && add <= 1e-9 && energy <= 1e-10 && decreasing > 0 &&
                  decreasing < 400 && cases >= 4;
  char detail[240];
  std::snprintf(detail, sizeof detail,
                "pythagorean %.1e <= 1e-11, double angle %.1e <= 1e-10, addition %.1e <= 1e-9 (%d sign cases), "
                "energy %.1e <= 1e-10",
                pyth, dbl, add, cases, energy);
  report(4, "identity suites", ok, detail);
}

void symbolic_certification() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = symbolic::verify_all();
  const double elapsed = seconds_since(t0);
  bool ok = elapsed < 1.0 && !reports.empty();
  std::size_t surviving = 0;
  for (const auto& r : reports) {
    ok = ok && r.holds();
    surviving += r.difference.term_count();
  }
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu exact identities, %zu surviving terms, %.3f s", reports.size(), surviving,
                elapsed);
  report(5, "symbolic certification", ok, detail);
}

void degeneration() {
  double trig = 0.0;
  for (double l = -10.0; l <= 10.0; l += 0.001)
    trig = std::max({trig, std::abs(sleaf(1, l).r - std::sin(l)), std::abs(cleaf(1, l).r - std::cos(l))});
  const double q = period_constants(2).half_pi_n;
  double lemn = 0.0;
  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> dist(-q, q);
  for (int i = 0; i < 1000; ++i) {
    const double l1 = dist(gen), l2 = dist(gen);
    lemn = std::max(lemn, std::abs(sl_add(l1, l2) - sleaf(2, l1 + l2).r));
  }
  char detail[128];
  std::snprintf(detail, sizeof detail, "n=1 vs sin/cos %.1e <= 1e-12, n=2 addition %.1e <= 1e-10", trig, lemn);
  report(6, "degeneration", trig <= 1e-12 && lemn <= 1e-10, detail);
}

void addition_invariance() {
  const double h = 1e-5;
  const double q = period_constants(3).half_pi_n;
  std::mt19937_64 gen(44);
  std::uniform_real_distribution<double> dist(0.02, 1.0);
  double deriv = 0.0, shift = 0.0;
  int pairs = 0;
  while (pairs < 100) {
    const double l1 = dist(gen) * q, l2 = dist(gen) * q;
    // interior: both arguments and the sum away from the crest of |sleaf|
    if (l1 + l2 > q - 0.05 && l1 + l2 < q + 0.05) continue;
    if (l1 + l2 >= 2 * q - 0.05) continue;
    const double d1 = (addition_g(l1 + h, l2) - addition_g(l1 - h, l2)) / (2 * h);
    const double d2 = (addition_g(l1, l2 + h) - addition_g(l1, l2 - h)) / (2 * h);
    deriv = std::max(deriv, std::abs(d1 - d2));
    shift = std::max(shift, std::abs(addition_g(l1, l2) - addition_g(l1 + l2, 0.0)));
    ++pairs;
  }
  char detail[128];
  std::snprintf(detail, sizeof detail, "%d pairs, dg/dl1 - dg/dl2 %.1e <= 1e-6, shift %.1e <= 1e-9", pairs, deriv,
                shift);
  report(7, "addition invariance", deriv <= 1e-6 && shift <= 1e-9, detail);
}

void oracle_cross_check() {
  constexpr double tol = 1e-8;
  const auto s_traj = integrate_leaf_ode(3, {0.0, 0.0, 1.0}, 10.0, 1e-12);
  const auto c_traj = integrate_leaf_ode(3, {0.0, 1.0, 0.0}, 10.0, 1e-12);
  double worst = 0.0;
  for (double l : samples(200, 0.0, 10.0, 45))
    worst = std::max({worst, std::abs(sleaf(3, l).r - s_traj.at(l).r), std::abs(cleaf(3, l).r - c_traj.at(l).r)});
  report(8, "inversion vs ODE, 200 samples on [0, 10]", worst <= tol, residual(worst, tol));
}

}  // namespace

int main() {
  try {
    table_reproduction();
    worked_example();
    period_claims();
    identity_suites();
    symbolic_certification();
    degeneration();
    addition_invariance();
    oracle_cross_check();
  } catch (const std::exception& e) {
    std::printf("FAIL unexpected exception: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
