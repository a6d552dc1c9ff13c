#pragma once

// Independent route to the leaf functions: integrate r'' = −n r^{2n−1}
// directly with an adaptive Dormand–Prince 5(4) pair and PI step control.
// Shares nothing with the quadrature/inversion path in core.

#include <leafkernel/base.hpp>
#include <leafkernel/numerics.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace leaf {

struct OdeState {
  double l = 0.0;
  double r = 0.0;
  double v = 0.0;  // dr/dl
};

/// v² + r^{2n}; 1 on the unit-amplitude orbits.
inline double energy(LeafOrder n, const OdeState& s) { return s.v * s.v + std::pow(s.r, 2 * n.value()); }

namespace detail {

using Vec2 = std::array<double, 2>;

inline Vec2 leaf_rhs(int n, const Vec2& y) { return {y[1], -n * std::pow(y[0], 2 * n - 1)}; }

// Dormand–Prince tableau.
struct DormandPrince {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                          a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
  // Continuous extension (Hairer, Nørsett & Wanner).
  static constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                          d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                          d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
};

}  // namespace detail

/// One accepted step with its dense-output coefficients.
struct OdeStep {
  double l0 = 0.0;
  double h = 0.0;
  std::array<std::array<double, 5>, 2> coeffs{};  // per component

  double end() const { return l0 + h; }

  OdeState at(double l) const {
    const double theta = (l - l0) / h;
    const double theta1 = 1.0 - theta;
    OdeState out{l, 0.0, 0.0};
    std::array<double, 2> y{};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& c = coeffs[i];
      y[i] = c[0] + theta * (c[1] + theta1 * (c[2] + theta * (c[3] + theta1 * c[4])));
    }
    out.r = y[0];
    out.v = y[1];
    return out;
  }
};

class Trajectory {
 public:
  Trajectory(LeafOrder n, OdeState init) : n_(n), states_{init} {}

  LeafOrder order() const { return n_; }
  const std::vector<OdeState>& states() const { return states_; }
  const std::vector<OdeStep>& steps() const { return steps_; }
  double start() const { return states_.front().l; }
  double end() const { return states_.back().l; }

  /// Dense output anywhere in [start, end].
  OdeState at(double l) const {
    if (!(l >= start() && l <= end())) throw domain_error("Trajectory::at: l outside integrated range");
    if (steps_.empty()) return states_.front();
    auto it = std::lower_bound(steps_.begin(), steps_.end(), l,
                               [](const OdeStep& s, double value) { return s.end() < value; });
    if (it == steps_.end()) --it;
    return it->at(l);
  }

  void push(const OdeStep& step, const OdeState& state) {
    steps_.push_back(step);
    states_.push_back(state);
  }

 private:
  LeafOrder n_;
  std::vector<OdeState> states_;
  std::vector<OdeStep> steps_;
};

inline constexpr long kMaxOdeSteps = 10'000'000;

/**
 * Adaptive solution of r'' = −n r^{2n−1} from init up to l_end (≥ init.l).
 * tol is used as both the absolute and relative local error tolerance and
 * must lie in [1e−13, 1e−6].
 */
inline Trajectory integrate_leaf_ode(LeafOrder n, OdeState init, double l_end, double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) throw domain_error("integrate_leaf_ode: tol must lie in [1e-13, 1e-6]");
  if (!(l_end >= init.l) || !std::isfinite(l_end)) throw domain_error("integrate_leaf_ode: need l_end >= init.l");
  using DP = detail::DormandPrince;
  using detail::Vec2;

  const int order = n.value();
  Trajectory traj(n, init);
  double l = init.l;
  Vec2 y{init.r, init.v};
  Vec2 k1 = detail::leaf_rhs(order, y);

  double h = std::min(l_end - l, 1e-2);
  double err_old = 1e-4;
  bool rejected = false;
  constexpr double safety = 0.9, fac_min = 0.2, fac_max = 10.0, beta = 0.04;
  const double alpha = 0.2 - beta * 0.75;

  for (long step = 0; l < l_end; ++step) {
    if (step > kMaxOdeSteps) throw stiffness_error("integrate_leaf_ode: step budget exhausted");
    if (h < 1e-14 * std::max(1.0, std::abs(l))) throw stiffness_error("integrate_leaf_ode: step size underflow");
    if (l + 1.01 * h >= l_end) h = l_end - l;

    auto stage = [&](std::initializer_list<std::pair<double, const Vec2*>> terms) {
      Vec2 out = y;
      for (const auto& [a, k] : terms)
        for (std::size_t i = 0; i < 2; ++i) out[i] += h * a * (*k)[i];
      return detail::leaf_rhs(order, out);
    };
    const Vec2 k2 = stage({{DP::a21, &k1}});
    const Vec2 k3 = stage({{DP::a31, &k1}, {DP::a32, &k2}});
    const Vec2 k4 = stage({{DP::a41, &k1}, {DP::a42, &k2}, {DP::a43, &k3}});
    const Vec2 k5 = stage({{DP::a51, &k1}, {DP::a52, &k2}, {DP::a53, &k3}, {DP::a54, &k4}});
    const Vec2 k6 = stage({{DP::a61, &k1}, {DP::a62, &k2}, {DP::a63, &k3}, {DP::a64, &k4}, {DP::a65, &k5}});
    Vec2 y1 = y;
    for (std::size_t i = 0; i < 2; ++i)
      y1[i] += h * (DP::a71 * k1[i] + DP::a73 * k3[i] + DP::a74 * k4[i] + DP::a75 * k5[i] + DP::a76 * k6[i]);
    const Vec2 k7 = detail::leaf_rhs(order, y1);

    double err = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double e =
          h * (DP::e1 * k1[i] + DP::e3 * k3[i] + DP::e4 * k4[i] + DP::e5 * k5[i] + DP::e6 * k6[i] + DP::e7 * k7[i]);
      const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (e / scale) * (e / scale);
    }
    err = std::sqrt(err / 2.0);

    if (err <= 1.0) {
      OdeStep rec;
      rec.l0 = l;
      rec.h = h;
      for (std::size_t i = 0; i < 2; ++i) {
        auto& c = rec.coeffs[i];
        c[0] = y[i];
        c[1] = y1[i] - y[i];
        c[2] = h * k1[i] - c[1];
        c[3] = c[1] - h * k7[i] - c[2];
        c[4] = h * (DP::d1 * k1[i] + DP::d3 * k3[i] + DP::d4 * k4[i] + DP::d5 * k5[i] + DP::d6 * k6[i] +
                    DP::d7 * k7[i]);
      }
      l = (h == l_end - l) ? l_end : l + h;
      y = y1;
      k1 = k7;
      traj.push(rec, {l, y[0], y[1]});

      double fac = std::pow(std::max(err, 1e-10), alpha) / std::pow(err_old, beta) / safety;
      fac = std::clamp(fac, 1.0 / fac_max, 1.0 / fac_min);
      double h_new = h / fac;
      if (rejected) h_new = std::min(h_new, h);
      err_old = std::max(err, 1e-4);
      rejected = false;
      h = h_new;
    } else {
      const double fac = std::clamp(std::pow(err, alpha) / safety, 1.0, 1.0 / fac_min);
      h /= fac;
      rejected = true;
    }
  }
  return traj;
}

/// Times inside the trajectory where v changes sign from + to − (local maxima of r).
inline std::vector<double> crest_times(const Trajectory& traj) {
  std::vector<double> out;
  for (const auto& step : traj.steps()) {
    const double v0 = step.at(step.l0).v;
    const double v1 = step.at(step.end()).v;
    if (!(v0 > 0.0 && v1 <= 0.0)) continue;
    // v is decreasing through the crossing; invert −v.
    const double t = invert_increasing([&step](double l) { return -step.at(l).v; }, 0.0, step.l0, step.end(), 0.0);
    if (step.at(t).r > 0.0) out.push_back(t);
  }
  return out;
}

/// max |r| over the extrema of the trajectory (and its endpoints).
inline double max_amplitude(const Trajectory& traj) {
  double best = 0.0;
  for (const auto& s : traj.states()) best = std::max(best, std::abs(s.r));
  for (const auto& step : traj.steps()) {
    const double v0 = step.at(step.l0).v;
    const double v1 = step.at(step.end()).v;
    if ((v0 > 0.0) == (v1 > 0.0) || v0 == 0.0 || v1 == 0.0) continue;
    const double sign = v0 < 0.0 ? 1.0 : -1.0;
    const double t =
        invert_increasing([&step, sign](double l) { return sign * step.at(l).v; }, 0.0, step.l0, step.end(), 0.0);
    best = std::max(best, std::abs(step.at(t).r));
  }
  return best;
}

/**
 * Period of the unit-energy orbit, measured as the first return of the
 * cleaf initial state (r, v) = (1, 0): the first crest after l = 0.
 * Periods of the family are at most 2π, so the search stops at 3·2π.
 */
inline double measure_period(LeafOrder n, double tol) {
  const double horizon = 3.0 * 2.0 * std::numbers::pi;
  const auto traj = integrate_leaf_ode(n, {0.0, 1.0, 0.0}, horizon, tol);
  for (double t : crest_times(traj))
    if (t > 0.0) return t;
  throw detection_error("measure_period: no return to the initial state within the horizon");
}

}  // namespace leaf
