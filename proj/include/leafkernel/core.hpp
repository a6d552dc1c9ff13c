#pragma once

/**
 * Forward evaluation of sleaf_n and cleaf_n on the whole real line.
 *
 * sleaf_n is obtained by inverting the arc integral on the principal quarter
 * branch [0, π_n/2] and extending by reflection about π_n/2, oddness and the
 * period 2π_n.  Above π_n/4 the complementary integral is inverted instead, so
 * the distance 1 − r stays accurate near the crests.
 *
 * cleaf_n (n ≤ 3) follows from sleaf_n through
 *
 *   s² + c² + (n − 1)·s²·c² = 1,
 *
 * with cleaf(0) = 1 and c > 0 exactly where sleaf is increasing.
 */

#include <leafkernel/base.hpp>
#include <leafkernel/numerics.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace leaf {

/// Largest |l| accepted by the period reduction.
inline constexpr double kReductionEnvelope = 1e6;

struct LeafArg {
  double l = 0.0;
  LeafOrder n = 1;
  double residue = 0.0;  // in [-π_n/2, 3π_n/2)
  long branch_m = 0;
  bool negated = false;  // l = -(residue + 2 m π_n) when set

  /// Inverse of the reduction, up to rounding.
  double reconstruct() const {
    const double a = residue + 2.0 * static_cast<double>(branch_m) * period_constants(n).pi_n;
    return negated ? -a : a;
  }
};

struct LeafValue {
  double r = 0.0;
  double dr = 0.0;  // dr/dl
  LeafOrder n = 1;
};

enum class AdditionCase { i, ii };

/// Derivative signs at the two arguments and the formula case they select.
struct BranchCase {
  int s_sign_l1 = 1;
  int s_sign_l2 = 1;
  int c_sign_l1 = -1;
  AdditionCase case_id = AdditionCase::i;
};

inline LeafArg reduce_arg(LeafOrder n, double l) {
  if (!std::isfinite(l) || std::abs(l) > kReductionEnvelope)
    throw range_error("reduce_arg: |l| beyond reduction envelope " + std::to_string(kReductionEnvelope));
  const auto constants = period_constants(n);
  const double quarter = constants.half_pi_n;
  const double period = constants.period;

  LeafArg arg{l, n, 0.0, 0, l < 0.0};
  const double a = std::abs(l);
  long m = static_cast<long>(std::floor((a + quarter) / period));
  double residue = a - static_cast<double>(m) * period;
  if (residue < -quarter) {
    --m;
    residue += period;
  } else if (residue >= 3.0 * quarter) {
    ++m;
    residue -= period;
  }
  arg.residue = residue;
  arg.branch_m = m;
  return arg;
}

/// +1 on [(2m − ½)π_n, (2m + ½)π_n), −1 on [(2m + ½)π_n, (2m + 3/2)π_n).
inline int sign_sleaf_prime(LeafOrder n, double l) {
  if (!std::isfinite(l) || std::abs(l) > kReductionEnvelope)
    throw range_error("sign_sleaf_prime: |l| beyond reduction envelope");
  const double pi_n = period_constants(n).pi_n;
  const double k = std::floor((l + 0.5 * pi_n) / pi_n);
  return std::fmod(k, 2.0) == 0.0 ? 1 : -1;
}

/// −1 on [2kπ_n, (2k + 1)π_n), +1 on [(2k + 1)π_n, (2k + 2)π_n).
inline int sign_cleaf_prime(LeafOrder n, double l) {
  if (!std::isfinite(l) || std::abs(l) > kReductionEnvelope)
    throw range_error("sign_cleaf_prime: |l| beyond reduction envelope");
  const double pi_n = period_constants(n).pi_n;
  const double k = std::floor(l / pi_n);
  return std::fmod(k, 2.0) == 0.0 ? -1 : 1;
}

inline int sign_sleaf_prime(double l) { return sign_sleaf_prime(3, l); }
inline int sign_cleaf_prime(double l) { return sign_cleaf_prime(3, l); }

namespace detail {

// r on the principal branch together with 1 − r.
struct PrincipalValue {
  double r;
  double complement;
};

inline PrincipalValue principal_sleaf(LeafOrder n, double y) {
  const double quarter = period_constants(n).half_pi_n;
  y = std::clamp(y, 0.0, quarter);
  if (y == 0.0) return {0.0, 1.0};
  if (y <= 0.5 * quarter) {
    const double r = invert_increasing([n](double x) { return leaf_integral(n, x); }, y, 0.0, std::min(1.0, y), 0.0);
    return {r, 1.0 - r};
  }
  // ∫_{1-e}^1 ≥ √(2e/n) bounds the complement from above.
  const double gap = quarter - y;
  if (gap <= 0.0) return {1.0, 0.0};
  const double upper = std::min(1.0, 0.5 * n.value() * gap * gap);
  const double e =
      invert_increasing([n](double x) { return leaf_integral_complement(n, x); }, gap, 0.0, upper, 0.0);
  return {1.0 - e, e};
}

// Signed sleaf value of a reduced residue plus the accurate 1 − |r|.
inline PrincipalValue residue_sleaf(LeafOrder n, double residue, int& sign) {
  const double quarter = period_constants(n).half_pi_n;
  sign = 1;
  if (residue < 0.0) {
    sign = -1;
    return principal_sleaf(n, -residue);
  }
  if (residue <= quarter) return principal_sleaf(n, residue);
  if (residue <= 2.0 * quarter) return principal_sleaf(n, 2.0 * quarter - residue);
  sign = -1;
  return principal_sleaf(n, residue - 2.0 * quarter);
}

// 1 − r^{2n} given 1 − |r|.
inline double energy_gap(double complement, int n) {
  if (complement >= 1.0) return 1.0;
  return std::max(0.0, -std::expm1(2.0 * n * std::log1p(-complement)));
}

}  // namespace detail

/// sleaf_n(l) with its derivative; dr² + r^{2n} = 1.
inline LeafValue sleaf(LeafOrder n, double l) {
  const LeafArg arg = reduce_arg(n, l);
  int sign = 1;
  const auto value = detail::residue_sleaf(n, arg.residue, sign);
  double r = std::clamp(static_cast<double>(sign) * value.r, -1.0, 1.0);
  if (arg.negated) r = -r;
  const double dr = sign_sleaf_prime(n, l) * std::sqrt(detail::energy_gap(value.complement, n.value()));
  return {r, dr, n};
}

/// cleaf_n(l) for n in {1, 2, 3}.
inline LeafValue cleaf(LeafOrder n, double l) {
  if (n.value() > 3) throw domain_error("cleaf: only n = 1, 2, 3 are supported");
  const LeafArg arg = reduce_arg(n, l);
  int sign = 1;
  const auto s = detail::residue_sleaf(n, arg.residue, sign);
  const double s2 = s.r * s.r;
  const double k = static_cast<double>(n.value() - 1);
  const double one_minus_s2 = s.complement * (2.0 - s.complement);
  const double c2 = std::clamp(one_minus_s2 / (1.0 + k * s2), 0.0, 1.0);
  const double one_minus_c2 = std::clamp(n.value() * s2 / (1.0 + k * s2), 0.0, 1.0);

  // 1 − c^{2n} = (1 − c²)(1 + c² + … + c^{2(n−1)})
  double tail = 0.0;
  double power = 1.0;
  for (int j = 0; j < n.value(); ++j) {
    tail += power;
    power *= c2;
  }
  const double c = sign_sleaf_prime(n, l) * std::sqrt(c2);
  const double dc = sign_cleaf_prime(n, l) * std::sqrt(one_minus_c2 * tail);
  return {c, dc, n};
}

/// Principal value in [−π_n/2, π_n/2].
inline double arcsleaf(LeafOrder n, double r) {
  if (!(r >= -1.0 && r <= 1.0)) throw domain_error("arcsleaf: |r| must be <= 1");
  const double a = std::abs(r);
  const double value = leaf_integral(n, a);
  return r < 0.0 ? -value : value;
}

inline BranchCase classify_sleaf_addition(double l1, double l2) {
  BranchCase bc;
  bc.s_sign_l1 = sign_sleaf_prime(l1);
  bc.s_sign_l2 = sign_sleaf_prime(l2);
  bc.c_sign_l1 = sign_cleaf_prime(l1);
  bc.case_id = bc.s_sign_l1 == bc.s_sign_l2 ? AdditionCase::i : AdditionCase::ii;
  return bc;
}

/// Case (i) when cleaf'(l1) and sleaf'(l2) have opposite signs.
inline BranchCase classify_cleaf_addition(double l1, double l2) {
  BranchCase bc;
  bc.s_sign_l1 = sign_sleaf_prime(l1);
  bc.s_sign_l2 = sign_sleaf_prime(l2);
  bc.c_sign_l1 = sign_cleaf_prime(l1);
  bc.case_id = bc.c_sign_l1 != bc.s_sign_l2 ? AdditionCase::i : AdditionCase::ii;
  return bc;
}

}  // namespace leaf
