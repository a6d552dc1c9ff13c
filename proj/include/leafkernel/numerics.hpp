#pragma once

/**
 * Low-level kernels for the leaf family.
 *
 *   arcsleaf_n(r) = ∫₀ʳ dt / √(1 − t^{2n})
 *
 * The integrand has a (1 − t)^{-1/2} singularity at t = 1.  Everything here
 * uses double-exponential (tanh-sinh) quadrature, which clusters nodes at both
 * endpoints doubly exponentially and so integrates such endpoint singularities
 * without special casing.  Nodes are handed to the integrand together with
 * their distance to each endpoint, so the integrand can form 1 − t^{2n}
 * without cancellation when t is close to 1.
 *
 * Inversion (r from l) is done by a bracketed Brent iteration.
 */

#include <leafkernel/base.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace leaf {

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_refinements = 10;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw domain_error("quadrature tolerances must be positive");
    if (max_refinements < 1) throw domain_error("max_refinements must be >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
};

namespace detail {

// Half-line of the tanh-sinh rule: x = tanh(π/2 sinh u), u > 0.
struct TanhSinhNode {
  double x;           // abscissa in (0, 1)
  double complement;  // 1 - x, computed without cancellation
  double weight;      // dx/du
};

inline constexpr double kTanhSinhWindow = 5.0;
inline constexpr int kTanhSinhMaxLevel = 20;

inline TanhSinhNode tanh_sinh_node(double u) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double v = half_pi * std::sinh(u);
  const double cv = std::cosh(v);
  return {std::tanh(v), 1.0 / (std::exp(v) * cv), half_pi * std::cosh(u) / (cv * cv)};
}

// Nodes first appearing at a refinement level: spacing 2^-level, odd
// multiples only for level > 0.
inline const std::vector<TanhSinhNode>& tanh_sinh_level(int level) {
  static std::array<std::once_flag, kTanhSinhMaxLevel + 1> once;
  static std::array<std::vector<TanhSinhNode>, kTanhSinhMaxLevel + 1> levels;
  std::call_once(once[static_cast<std::size_t>(level)], [level] {
    auto& nodes = levels[static_cast<std::size_t>(level)];
    const double h = std::ldexp(1.0, -level);
    const long count = std::lround(kTanhSinhWindow / h);
    const long stride = level == 0 ? 1 : 2;
    for (long k = 1; k <= count; k += stride) nodes.push_back(tanh_sinh_node(h * static_cast<double>(k)));
  });
  return levels[static_cast<std::size_t>(level)];
}

}  // namespace detail

/// Integrand receiving the node and its distances to both endpoints.
template <typename F>
concept EndpointAwareIntegrand = requires(F f, double t) {
  { f(t, t, t) } -> std::convertible_to<double>;
};

/**
 * Tanh-sinh quadrature of f over [a, b].
 *
 * Refines by halving the step until two successive levels differ by less than
 * max(abs_tol, rel_tol·|I|).  The integrand is never evaluated at a or b.
 * Throws convergence_error when max_refinements levels are not enough.
 */
template <EndpointAwareIntegrand F>
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (spec.max_refinements > detail::kTanhSinhMaxLevel)
    throw domain_error("max_refinements exceeds " + std::to_string(detail::kTanhSinhMaxLevel));
  if (a == b) return {};

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double width = std::abs(half);

  auto level_sum = [&](int level) {
    double sum = 0.0;
    for (const auto& node : detail::tanh_sinh_level(level)) {
      const double near = width * node.complement;
      const double far = width * (2.0 - node.complement);
      double pair = 0.0;
      if (near > 0.0) {
        pair += f(mid + half * node.x, half > 0 ? far : near, half > 0 ? near : far);
        pair += f(mid - half * node.x, half > 0 ? near : far, half > 0 ? far : near);
      }
      sum += node.weight * pair;
    }
    return sum;
  };

  double sum = std::numbers::pi / 2.0 * f(mid, width, width) + level_sum(0);
  double estimate = half * sum;
  double error = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= spec.max_refinements; ++level) {
    sum += level_sum(level);
    const double next = half * std::ldexp(sum, -level);
    error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate)))
      return {estimate, error, level};
  }
  throw convergence_error("tanh-sinh quadrature did not reach tolerance", estimate, error);
}

template <typename F>
  requires(!EndpointAwareIntegrand<F> && std::invocable<F, double>)
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  // Rebuild the node from the nearer endpoint so it keeps full precision there.
  const double dir = b > a ? 1.0 : -1.0;
  return tanh_sinh(
      [&f, a, b, dir](double t, double dist_a, double dist_b) {
        if (dist_a < dist_b) t = a + dir * dist_a;
        else if (dist_b < dist_a) t = b - dir * dist_b;
        return static_cast<double>(f(t));
      },
      a, b, spec);
}

namespace detail {

// 1 - t^{2n} for t in [0, 1] given exactly.
inline double one_minus_even_power(double t, int n) {
  if (t <= 0.0) return 1.0;
  return -std::expm1(2.0 * n * std::log(t));
}

// 1 - (1 - e)^{2n}, accurate for small e.
inline double one_minus_even_power_of_complement(double e, int n) {
  return -std::expm1(2.0 * n * std::log1p(-e));
}

}  // namespace detail

/// ∫₀ʳ dt/√(1 − t^{2n}) for r in [0, 1]; finite at r = 1.
inline double leaf_integral(LeafOrder n, double r, const QuadratureSpec& spec = {}) {
  if (!(r >= 0.0 && r <= 1.0)) throw domain_error("leaf_integral: r must lie in [0, 1]");
  if (r == 0.0) return 0.0;
  const int order = n.value();
  const double log_r = std::log(r);
  auto integrand = [order, r, log_r](double t, double, double to_upper) {
    // Near the upper limit, build log t from the distance to r.
    const double gap = to_upper < 0.25 * r
                           ? -std::expm1(2.0 * order * (log_r + std::log1p(-to_upper / r)))
                           : detail::one_minus_even_power(t, order);
    return 1.0 / std::sqrt(gap);
  };
  return tanh_sinh(integrand, 0.0, r, spec).value;
}

/**
 * Complementary integral ∫_{1−e}^{1} dt/√(1 − t^{2n}) for e in [0, 1].
 *
 * Integrated in the distance-from-one variable, so small e (arguments near a
 * crest of sleaf) keeps full relative accuracy.
 */
inline double leaf_integral_complement(LeafOrder n, double e, const QuadratureSpec& spec = {}) {
  if (!(e >= 0.0 && e <= 1.0)) throw domain_error("leaf_integral_complement: e must lie in [0, 1]");
  if (e == 0.0) return 0.0;
  const int order = n.value();
  auto integrand = [order](double, double from_one, double) {
    return 1.0 / std::sqrt(detail::one_minus_even_power_of_complement(from_one, order));
  };
  return tanh_sinh(integrand, 0.0, e, spec).value;
}

inline constexpr int kRootIterationCap = 200;

/**
 * Solve f(x) = target for x in [a, b], f continuous and increasing.
 *
 * Brent's method: inverse quadratic / secant steps, falling back to bisection
 * whenever a step leaves the bracket or stalls.  The bracket always contains
 * the root.  tol is an absolute tolerance on x; 0 asks for machine precision.
 */
template <typename F>
  requires std::invocable<F, double>
double invert_increasing(F&& f, double target, double a, double b, double tol) {
  if (!(a <= b)) throw bracket_error("invert_increasing: need a <= b");
  if (std::isnan(target)) throw bracket_error("invert_increasing: target is NaN");
  double fa = static_cast<double>(f(a)) - target;
  double fb = static_cast<double>(f(b)) - target;
  if (fa > 0.0 || fb < 0.0) throw bracket_error("invert_increasing: target outside [f(a), f(b)]");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < kRootIterationCap; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      else
        p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = static_cast<double>(f(b)) - target;
  }
  throw convergence_error("invert_increasing: iteration cap reached", b, std::abs(c - b));
}

struct PeriodConstants {
  LeafOrder n;
  double half_pi_n;  // ∫₀¹ dt/√(1 − t^{2n})
  double pi_n;
  double period;     // 2·pi_n
};

/// Cached per n; concurrent first calls compute once.
inline PeriodConstants period_constants(LeafOrder n) {
  static std::mutex mutex;
  static std::map<int, PeriodConstants> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n.value()); it != cache.end()) return it->second;
  const double half = leaf_integral(n, 1.0);
  const PeriodConstants constants{n, half, 2.0 * half, 4.0 * half};
  cache.emplace(n.value(), constants);
  return constants;
}

}  // namespace leaf
