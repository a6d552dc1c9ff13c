#pragma once

/**
 * Double-angle and addition formulas for sleaf_3 and cleaf_3, plus the
 * classical n = 1 and n = 2 formulas used as cross-checks.
 *
 * All n = 3 formulas take function values from core and recompute the
 * derivative magnitudes d = √(1 − v⁶) from the (clamped) values; the branch
 * sign multiplies d, never the value itself.  The addition formulas return
 * squares.  sleaf3_add recovers the sign separately.
 */

#include <leafkernel/core.hpp>

#include <algorithm>
#include <cmath>

namespace leaf {

namespace detail {

inline double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// √(1 − v^{2n}) with 1 − v² formed as (1 − v)(1 + v).
inline double derivative_magnitude(double v, int n) {
  const double a = std::abs(clamp_unit(v));
  const double v2 = a * a;
  double tail = 0.0;
  double power = 1.0;
  for (int j = 0; j < n; ++j) {
    tail += power;
    power *= v2;
  }
  return std::sqrt(std::max(0.0, (1.0 - a) * (1.0 + a) * tail));
}

inline int sign_of(AdditionCase c) { return c == AdditionCase::i ? 1 : -1; }

}  // namespace detail

struct AdditionInput {
  double l1 = 0.0;
  double l2 = 0.0;
  BranchCase branch;
};

inline AdditionInput sleaf_addition_input(double l1, double l2) {
  return {l1, l2, classify_sleaf_addition(l1, l2)};
}

inline AdditionInput cleaf_addition_input(double l1, double l2) {
  return {l1, l2, classify_cleaf_addition(l1, l2)};
}

/// sleaf_3(2l) = ±2s√(1 − s⁶)/√(1 + 8s⁶), sign from sleaf_3'(l).
inline double sleaf3_double(double l) {
  const double s = detail::clamp_unit(sleaf(3, l).r);
  const double s6 = std::pow(s, 6);
  const double d = sign_sleaf_prime(l) * detail::derivative_magnitude(s, 3);
  return 2.0 * s * d / std::sqrt(1.0 + 8.0 * s6);
}

/// cleaf_3(2l) from cleaf_3(l) alone; the positive root keeps cleaf_3(0) = 1.
inline double cleaf3_double(double l) {
  const double c = detail::clamp_unit(cleaf(3, l).r);
  const double c2 = c * c;
  const double c4 = c2 * c2;
  return (2.0 * c2 + 2.0 * c4 - 1.0) / std::sqrt(1.0 + 8.0 * c2 + 8.0 * c4 * c2 - 8.0 * c4 * c4);
}

/// The three building blocks of the sleaf_3 addition formula at (l1, l2).
struct AdditionTerms {
  double p1;  // s1·d2 + s2·d1 with signed derivatives
  double p2;  // s1³s2 − s1s2³
  double p3;  // 1 + 4s1⁴s2² + 4s1²s2⁴
};

inline AdditionTerms sleaf3_addition_terms(double s1, double s2, double d1, double d2) {
  const double s1sq = s1 * s1;
  const double s2sq = s2 * s2;
  return {s1 * d2 + s2 * d1, s1 * s2 * (s1sq - s2sq), 1.0 + 4.0 * s1sq * s2sq * (s1sq + s2sq)};
}

/// {sleaf_3(l1 + l2)}² from values at l1 and l2.
inline double sleaf3_add_squared(double l1, double l2) {
  const auto input = sleaf_addition_input(l1, l2);
  const double s1 = detail::clamp_unit(sleaf(3, l1).r);
  const double s2 = detail::clamp_unit(sleaf(3, l2).r);
  const double d1 = detail::derivative_magnitude(s1, 3);
  const double d2 = detail::derivative_magnitude(s2, 3);
  // Case (i): equal derivative signs, so the cross term adds.
  const auto t = sleaf3_addition_terms(s1, s2, detail::sign_of(input.branch.case_id) * d1, d2);
  return (t.p1 * t.p1 + t.p2 * t.p2) / t.p3;
}

/// Signed sleaf_3(l1 + l2); the sign comes from the reduced sum.
inline double sleaf3_add(double l1, double l2) {
  const double magnitude = std::sqrt(std::max(0.0, sleaf3_add_squared(l1, l2)));
  return std::signbit(sleaf(3, l1 + l2).r) ? -magnitude : magnitude;
}

/**
 * Candidate forms of the second numerator term in the cleaf_3 addition
 * formula.  Only shifted_argument agrees with direct evaluation; the other two
 * are kept so the arbitration stays reproducible.
 */
enum class CleafCrossTerm {
  s1_c2,             // s1³c2 − s1c2³
  mixed,             // s1³c2 − s2c1³
  shifted_argument,  // c1³s2 − c1s2³
};

/// {cleaf_3(l1 + l2)}² from sleaf_3 and cleaf_3 values at l1 and l2.
inline double cleaf3_add_squared(double l1, double l2, CleafCrossTerm form = CleafCrossTerm::shifted_argument) {
  const auto input = cleaf_addition_input(l1, l2);
  const double s1 = detail::clamp_unit(sleaf(3, l1).r);
  const double s2 = detail::clamp_unit(sleaf(3, l2).r);
  const double c1 = detail::clamp_unit(cleaf(3, l1).r);
  const double c2 = detail::clamp_unit(cleaf(3, l2).r);
  const double ds2 = detail::derivative_magnitude(s2, 3);
  const double dc1 = detail::derivative_magnitude(c1, 3);

  // Case (i): cleaf'(l1) and sleaf'(l2) differ in sign.
  const double first = c1 * ds2 - detail::sign_of(input.branch.case_id) * s2 * dc1;
  double cross = 0.0;
  switch (form) {
    case CleafCrossTerm::s1_c2:
      cross = s1 * s1 * s1 * c2 - s1 * c2 * c2 * c2;
      break;
    case CleafCrossTerm::mixed:
      cross = s1 * s1 * s1 * c2 - s2 * c1 * c1 * c1;
      break;
    case CleafCrossTerm::shifted_argument:
      cross = c1 * c1 * c1 * s2 - c1 * s2 * s2 * s2;
      break;
  }
  const double denom = 1.0 + 4.0 * std::pow(s2, 4) * c1 * c1 + 4.0 * s2 * s2 * std::pow(c1, 4);
  return (first * first + cross * cross) / denom;
}

/**
 * g(l1, l2) = √((p1² + p2²)/p3), the addition formula read as a function of
 * two independent arguments (p1 built from signed derivatives).  Equals
 * |sleaf_3(l1 + l2)|.
 */
inline double addition_g(double l1, double l2) {
  const auto v1 = sleaf(3, l1);
  const auto v2 = sleaf(3, l2);
  const double s1 = detail::clamp_unit(v1.r);
  const double s2 = detail::clamp_unit(v2.r);
  const auto t = sleaf3_addition_terms(s1, s2, sign_sleaf_prime(l1) * detail::derivative_magnitude(s1, 3),
                                       sign_sleaf_prime(l2) * detail::derivative_magnitude(s2, 3));
  return std::sqrt((t.p1 * t.p1 + t.p2 * t.p2) / t.p3);
}

// Classical reference formulas, evaluated with core values.

inline double sin_add(double l1, double l2) {
  return sleaf(1, l1).r * cleaf(1, l2).r + sleaf(1, l2).r * cleaf(1, l1).r;
}

inline double sl_double(double l) {
  const double s = detail::clamp_unit(sleaf(2, l).r);
  const double s4 = s * s * s * s;
  return 2.0 * s * sign_sleaf_prime(2, l) * detail::derivative_magnitude(s, 2) / (1.0 + s4);
}

inline double sl_add(double l1, double l2) {
  const double s1 = detail::clamp_unit(sleaf(2, l1).r);
  const double s2 = detail::clamp_unit(sleaf(2, l2).r);
  const double d1 = sign_sleaf_prime(2, l1) * detail::derivative_magnitude(s1, 2);
  const double d2 = sign_sleaf_prime(2, l2) * detail::derivative_magnitude(s2, 2);
  return (s1 * d2 + s2 * d1) / (1.0 + s1 * s1 * s2 * s2);
}

}  // namespace leaf
