#pragma once

// Test-only reference computations.  None of these call into the library's
// quadrature, inversion or polynomial code.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// ∫₀¹ dt/√(1 − t^{2n}) = B(1/(2n), 1/2)/(2n).
inline double beta_half_period(int n) {
  const double a = 1.0 / (2.0 * n);
  const double log_beta = std::lgamma(a) + std::lgamma(0.5) - std::lgamma(a + 0.5);
  return std::exp(log_beta) / (2.0 * n);
}

/**
 * ∫₀ʳ dt/√(1 − t^{2n}) by the substitution t = 1 − w², which turns the
 * integrand into the smooth 2/√(1 + t + … + t^{2n−1}); composite Simpson.
 */
inline double substituted_simpson(int n, double r, int panels = 20000) {
  const double w_lo = std::sqrt(1.0 - r);
  const double w_hi = 1.0;
  auto g = [n](double w) {
    const double t = 1.0 - w * w;
    double sum = 0.0, p = 1.0;
    for (int k = 0; k < 2 * n; ++k) {
      sum += p;
      p *= t;
    }
    return 2.0 / std::sqrt(sum);
  };
  const double h = (w_hi - w_lo) / panels;
  double acc = g(w_lo) + g(w_hi);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(w_lo + i * h);
  return acc * h / 3.0;
}

/// Binomial series Σ_k C(2k,k)/4^k · r^{2nk+1}/(2nk+1), enough terms for |r| ≤ 0.5.
inline double arc_series(int n, double r, int terms = 40) {
  double sum = 0.0;
  double coef = 1.0;  // C(2k,k)/4^k
  for (int k = 0; k < terms; ++k) {
    const int e = 2 * n * k + 1;
    sum += coef * std::pow(r, e) / e;
    coef *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
  }
  return sum;
}

/// Dense univariate product by convolution, integer coefficients.
inline std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<std::int64_t> subtract(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

/// Central difference of f at x.
template <typename F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
