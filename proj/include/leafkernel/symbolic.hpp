#pragma once

/**
 * Exact polynomial certificates for the sleaf_3 / cleaf_3 formula algebra.
 *
 * RationalPoly is a sparse polynomial with unbounded rational coefficients in
 * the generators s1, s2, d1, d2, x.  d1 and d2 stand for the derivatives
 * √(1 − s1⁶) and √(1 − s2⁶); every product is rewritten with
 *
 *   dᵢ² → 1 − sᵢ⁶
 *
 * so a canonical polynomial never carries dᵢ to a power above one.  Under
 * that rule, an identity between expressions in sᵢ and dᵢ holds iff the
 * difference of its two sides reduces to the zero polynomial.
 *
 * Square roots with a ± are only proved in squared form; sign selection is
 * the numeric layer's business.
 */

#include <leafkernel/base.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace leaf::symbolic {

using Rational = boost::multiprecision::cpp_rational;

enum class Gen : std::size_t { s1, s2, d1, d2, x };
inline constexpr std::size_t kGenCount = 5;
inline constexpr std::array<const char*, kGenCount> kGenNames{"s1", "s2", "d1", "d2", "x"};

using Exponents = std::array<unsigned, kGenCount>;

inline constexpr std::size_t index(Gen g) { return static_cast<std::size_t>(g); }

class RationalPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  RationalPoly() = default;
  RationalPoly(Rational c) {  // NOLINT(google-explicit-constructor)
    add_term(Exponents{}, std::move(c));
  }
  RationalPoly(long c) : RationalPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static RationalPoly gen(Gen g, unsigned power = 1) {
    Exponents e{};
    e[index(g)] = power;
    return monomial(1, e);
  }

  static RationalPoly monomial(Rational c, const Exponents& e) {
    RationalPoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly non-canonical) terms.
  static RationalPoly from_terms(const std::vector<std::pair<Exponents, Rational>>& terms) {
    RationalPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree(Gen g) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index(g)]);
    return d;
  }

  RationalPoly operator-() const {
    RationalPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  RationalPoly& operator+=(const RationalPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  RationalPoly& operator-=(const RationalPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  RationalPoly& operator*=(const RationalPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kGenCount; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.terms_ == b.terms_; }

  RationalPoly pow(unsigned k) const {
    RationalPoly out(1);
    RationalPoly base = *this;
    while (k > 0) {
      if (k & 1U) out *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return out;
  }

  /// Re-applies the rewrite to every term; a no-op on canonical input.
  RationalPoly normalize() const {
    RationalPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  /// Formal ∂/∂g treating all generators as independent.
  RationalPoly partial(Gen g) const {
    RationalPoly out;
    const std::size_t i = index(g);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents de = e;
      --de[i];
      out.add_term(de, c * e[i]);
    }
    return out;
  }

  /// Chain rule: Σ_g ∂p/∂g · rates[g], for a derivation given on generators.
  RationalPoly derive(const std::array<RationalPoly, kGenCount>& rates) const {
    RationalPoly out;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (rates[i].is_zero()) continue;
      out += partial(static_cast<Gen>(i)) * rates[i];
    }
    return out;
  }

  /// Replaces generator g by a polynomial.
  RationalPoly substitute(Gen g, const RationalPoly& value) const {
    RationalPoly out;
    const std::size_t i = index(g);
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[i] = 0;
      out += monomial(c, rest) * value.pow(e[i]);
    }
    return out;
  }

  double evaluate(const std::array<double, kGenCount>& at) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = static_cast<double>(c);
      for (std::size_t i = 0; i < kGenCount; ++i)
        for (unsigned k = 0; k < e[i]; ++k) term *= at[i];
      sum += term;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first)
        out << (c < 0 ? "-" : "");
      else
        out << (c < 0 ? " - " : " + ");
      first = false;
      bool has_gen = false;
      for (unsigned v : e) has_gen |= v > 0;
      if (!has_gen || mag != 1) out << mag;
      bool need_star = !has_gen || mag != 1;
      for (std::size_t i = 0; i < kGenCount; ++i) {
        if (e[i] == 0) continue;
        if (need_star) out << '*';
        out << kGenNames[i];
        if (e[i] > 1) out << '^' << e[i];
        need_star = true;
      }
    }
    return out.str();
  }

 private:
  // Adds c·monomial(e), folding dᵢ^k with k ≥ 2 through dᵢ² = 1 − sᵢ⁶.
  void add_term(Exponents e, Rational c) {
    if (c == 0) return;
    for (auto [d, s] : {std::pair{Gen::d1, Gen::s1}, std::pair{Gen::d2, Gen::s2}}) {
      if (e[index(d)] >= 2) {
        Exponents lowered = e;
        lowered[index(d)] -= 2;
        Exponents shifted = lowered;
        shifted[index(s)] += 6;
        add_term(lowered, c);
        add_term(shifted, -c);
        return;
      }
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// num/den without cancellation; zero iff the numerator is zero.
struct RationalFunction {
  RationalPoly num;
  RationalPoly den = RationalPoly(1);

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num.is_zero()) throw domain_error("RationalFunction: division by zero");
    return {a.num * b.den, a.den * b.num};
  }
};

// Shorthands for the generators.
inline RationalPoly s1() { return RationalPoly::gen(Gen::s1); }
inline RationalPoly s2() { return RationalPoly::gen(Gen::s2); }
inline RationalPoly d1() { return RationalPoly::gen(Gen::d1); }
inline RationalPoly d2() { return RationalPoly::gen(Gen::d2); }
inline RationalPoly x() { return RationalPoly::gen(Gen::x); }

/// ∂/∂l1: s1' = d1, d1' = −3s1⁵; l2-generators are constant.
inline std::array<RationalPoly, kGenCount> derivation_l1() {
  return {d1(), RationalPoly(), RationalPoly(-3) * s1().pow(5), RationalPoly(), RationalPoly()};
}

/// ∂/∂l2: s2' = d2, d2' = −3s2⁵.
inline std::array<RationalPoly, kGenCount> derivation_l2() {
  return {RationalPoly(), d2(), RationalPoly(), RationalPoly(-3) * s2().pow(5), RationalPoly()};
}

/// p1 = s1·d2 + s2·d1,  p2 = s1³s2 − s1s2³,  p3 = 1 + 4s1⁴s2² + 4s1²s2⁴.
inline RationalPoly build_p(int i) {
  switch (i) {
    case 1:
      return s1() * d2() + s2() * d1();
    case 2:
      return s1().pow(3) * s2() - s1() * s2().pow(3);
    case 3:
      return RationalPoly(1) + RationalPoly(4) * s1().pow(4) * s2().pow(2) +
             RationalPoly(4) * s1().pow(2) * s2().pow(4);
    default:
      throw domain_error("build_p: index must be 1, 2 or 3");
  }
}

/// Numerator of ∂g/∂l for g² = (p1² + p2²)/p3, up to the factor 1/(2g·p3²).
inline RationalPoly quotient_numerator(const std::array<RationalPoly, kGenCount>& derivation) {
  const auto p1 = build_p(1);
  const auto p2 = build_p(2);
  const auto p3 = build_p(3);
  return (RationalPoly(2) * p1 * p1.derive(derivation) + RationalPoly(2) * p2 * p2.derive(derivation)) * p3 -
         (p1 * p1 + p2 * p2) * p3.derive(derivation);
}

/// The closed form both numerators reduce to.
inline RationalPoly expanded_numerator() {
  auto a = s1();
  auto b = s2();
  const RationalPoly first = RationalPoly(2) * a - RationalPoly(8) * a.pow(5) * b.pow(2) -
                             RationalPoly(24) * a.pow(3) * b.pow(4) - RationalPoly(8) * a * b.pow(6) -
                             RationalPoly(16) * a.pow(5) * b.pow(8);
  const RationalPoly second = RationalPoly(2) * b - RationalPoly(8) * a.pow(2) * b.pow(5) -
                              RationalPoly(24) * a.pow(4) * b.pow(3) - RationalPoly(8) * a.pow(6) * b -
                              RationalPoly(16) * a.pow(8) * b.pow(5);
  return first * d1() + second * d2();
}

struct ProofReport {
  std::string identity;
  RationalPoly difference;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;

  bool holds() const { return difference.is_zero(); }

  /// Multi-line text; surviving monomials are listed when the identity fails.
  std::string to_string() const {
    std::ostringstream out;
    out << identity << ": residual " << difference.term_count() << " terms"
        << " (lhs " << lhs_terms << " terms, rhs " << rhs_terms << " terms) " << (holds() ? "PROVED" : "FAILED")
        << '\n';
    out << "  difference: " << difference.to_string() << '\n';
    return out.str();
  }
};

inline ProofReport make_report(std::string identity, const RationalPoly& lhs, const RationalPoly& rhs) {
  return {std::move(identity), lhs - rhs, lhs.term_count(), rhs.term_count()};
}

/**
 * The l1- and l2-derivative numerators of g coincide, and both equal the
 * expanded closed form.  Second-derivative terms enter through d' = −3s⁵.
 */
inline std::vector<ProofReport> verify_numerator_identity() {
  const auto n1 = quotient_numerator(derivation_l1());
  const auto n2 = quotient_numerator(derivation_l2());
  const auto closed = expanded_numerator();
  return {make_report("numerator_l1 == numerator_l2", n1, n2),
          make_report("numerator_l1 == expanded form", n1, closed),
          make_report("numerator_l2 == expanded form", n2, closed)};
}

/**
 * Double-angle algebra in x = r₂⁶:
 *   (1 + 8x)³ − 64x(1 − x)³ = (1 − 20x − 8x²)²        (1 − r₁⁶ cleared)
 *   2 − 40x − 16x² = 2(1 − 20x − 8x²)                  (product collapses to 2)
 * and the derivative of r₁² = 4r²(1 − r⁶)/(1 + 8r⁶) with r = s1, checked as the
 * cleared quotient-rule numerator.
 */
inline std::vector<ProofReport> verify_double_angle_identity() {
  const RationalPoly one(1);
  const auto lhs = (one + RationalPoly(8) * x()).pow(3) - RationalPoly(64) * x() * (one - x()).pow(3);
  const auto base = one - RationalPoly(20) * x() - RationalPoly(8) * x().pow(2);
  const auto rhs = base.pow(2);

  const auto r = s1();
  const auto num = RationalPoly(4) * r.pow(2) * (one - r.pow(6));
  const auto den = one + RationalPoly(8) * r.pow(6);
  const auto quotient_rule = num.partial(Gen::s1) * den - num * den.partial(Gen::s1);
  const auto claimed = RationalPoly(4) * r *
                       (RationalPoly(2) - RationalPoly(40) * r.pow(6) - RationalPoly(16) * r.pow(12));

  return {make_report("(1+8x)^3 - 64x(1-x)^3 == (1-20x-8x^2)^2", lhs, rhs),
          make_report("2 - 40x - 16x^2 == 2(1-20x-8x^2)",
                      RationalPoly(2) - RationalPoly(40) * x() - RationalPoly(16) * x().pow(2),
                      RationalPoly(2) * base),
          make_report("d/dr [4r^2(1-r^6)/(1+8r^6)] numerator", quotient_rule, claimed)};
}

/// p1·∂₁p1 + p2·∂₁p2 = (s1 − 4s1³s2⁴)d1 + (s2 − 4s1⁶s2)d2.
inline ProofReport verify_derivative_closed_form() {
  const auto p1 = build_p(1);
  const auto p2 = build_p(2);
  const auto lhs = p1 * p1.derive(derivation_l1()) + p2 * p2.derive(derivation_l1());
  const auto rhs = (s1() - RationalPoly(4) * s1().pow(3) * s2().pow(4)) * d1() +
                   (s2() - RationalPoly(4) * s1().pow(6) * s2()) * d2();
  return make_report("p1*dp1/dl1 + p2*dp2/dl1 == closed form", lhs, rhs);
}

/**
 * S² + C² + 2S²C² = 1 for S = sleaf_3(2l), C = cleaf_3(2l) given by the
 * double-angle formulas, on the curve s² + c² + 2s²c² = 1.  The curve is
 * eliminated through s² = (1 − u)/(1 + 2u) with u = c², carried by x.
 */
inline ProofReport verify_pythagorean_double() {
  const RationalPoly one(1);
  const auto u = x();
  const RationalFunction s_sq{one - u, one + RationalPoly(2) * u};
  const RationalFunction s_six = s_sq * s_sq * s_sq;
  const RationalFunction four{RationalPoly(4)};
  const RationalFunction unit{one};
  const RationalFunction eight{RationalPoly(8)};

  // S² = 4s²(1 − s⁶)/(1 + 8s⁶)
  const RationalFunction big_s_sq = four * s_sq * (unit - s_six) / (unit + eight * s_six);
  // C² = (2u + 2u² − 1)² / (1 + 8u + 8u³ − 8u⁴)
  const RationalFunction big_c_sq{
      (RationalPoly(2) * u + RationalPoly(2) * u.pow(2) - one).pow(2),
      one + RationalPoly(8) * u + RationalPoly(8) * u.pow(3) - RationalPoly(8) * u.pow(4)};
  const RationalFunction two{RationalPoly(2)};
  const RationalFunction total = big_s_sq + big_c_sq + two * big_s_sq * big_c_sq;
  // total == 1  <=>  total.num − total.den == 0
  return make_report("S^2 + C^2 + 2S^2C^2 == 1 at the doubled argument", total.num, total.den);
}

/// Every certificate, in a fixed order.
inline std::vector<ProofReport> verify_all() {
  std::vector<ProofReport> out = verify_numerator_identity();
  for (auto& r : verify_double_angle_identity()) out.push_back(std::move(r));
  out.push_back(verify_derivative_closed_form());
  out.push_back(verify_pythagorean_double());
  return out;
}

}  // namespace leaf::symbolic
