#pragma once

// Shared vocabulary: the family index and the error hierarchy.

#include <stdexcept>
#include <string>

namespace leaf {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

// Argument inside the domain but outside the precision envelope.
class range_error : public error {
 public:
  using error::error;
};

class bracket_error : public error {
 public:
  using error::error;
};

// Iterative method gave up; carries its best estimate and an error bound.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double estimate, double error_bound)
      : error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Step size underflow in the ODE integrator.
class stiffness_error : public error {
 public:
  using error::error;
};

// Periodic event not found inside the search horizon.
class detection_error : public error {
 public:
  using error::error;
};

/// Family member selector: r'' = -n r^(2n-1).  Always >= 1.
class LeafOrder {
 public:
  constexpr LeafOrder(int n) : n_(n) {  // NOLINT(google-explicit-constructor)
    if (n < 1) throw domain_error("leaf order must be >= 1, got " + std::to_string(n));
  }

  constexpr int value() const noexcept { return n_; }
  constexpr operator int() const noexcept { return n_; }  // NOLINT

 private:
  int n_;
};

}  // namespace leaf
