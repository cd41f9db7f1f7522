#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "infoatoms/rational.hpp"

namespace infoatoms {

/// Single comparison tolerance shared by every real-valued check.
inline constexpr double kTolerance = 1e-9;

/// An information quantity in bits. Carries an exact rational value when one
/// is known (all masses dyadic) alongside the floating approximation.
class Bits {
 public:
  Bits() : approx_(0.0), exact_(Rational(0)) {}
  explicit Bits(double v) : approx_(v) {}
  explicit Bits(const Rational& q) : approx_(q.get_d()), exact_(q) {}

  double value() const noexcept { return approx_; }
  const std::optional<Rational>& exact() const noexcept { return exact_; }
  bool is_exact() const noexcept { return exact_.has_value(); }

  /// Exact value when known, otherwise a rationalized approximation.
  Rational to_rational() const;

  friend Bits operator+(const Bits& a, const Bits& b);
  friend Bits operator-(const Bits& a, const Bits& b);
  friend Bits operator-(const Bits& a);
  friend Bits operator*(long k, const Bits& a);
  Bits& operator+=(const Bits& o) { return *this = *this + o; }
  Bits& operator-=(const Bits& o) { return *this = *this - o; }

  /// Exact equality when both sides are exact, tolerance otherwise.
  bool equals(const Bits& o, double tol = kTolerance) const;
  /// this > o, strictly beyond the tolerance (exact when possible).
  bool exceeds(const Bits& o, double tol = kTolerance) const;
  bool is_zero(double tol = kTolerance) const { return equals(Bits(), tol); }

  std::string to_string() const;

 private:
  double approx_;
  std::optional<Rational> exact_;
};

std::ostream& operator<<(std::ostream& os, const Bits& b);

}  // namespace infoatoms
