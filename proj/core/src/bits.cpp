#include "infoatoms/bits.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace infoatoms {

Rational Bits::to_rational() const {
  if (exact_) return *exact_;
  if (auto q = rationalize(approx_, kTolerance * 1e-3)) return *q;
  return Rational(approx_);
}

Bits operator+(const Bits& a, const Bits& b) {
  if (a.exact_ && b.exact_) return Bits(Rational(*a.exact_ + *b.exact_));
  return Bits(a.approx_ + b.approx_);
}

Bits operator-(const Bits& a, const Bits& b) {
  if (a.exact_ && b.exact_) return Bits(Rational(*a.exact_ - *b.exact_));
  return Bits(a.approx_ - b.approx_);
}

Bits operator-(const Bits& a) {
  if (a.exact_) return Bits(Rational(-*a.exact_));
  return Bits(-a.approx_);
}

Bits operator*(long k, const Bits& a) {
  if (a.exact_) return Bits(Rational(*a.exact_ * k));
  return Bits(static_cast<double>(k) * a.approx_);
}

bool Bits::equals(const Bits& o, double tol) const {
  if (exact_ && o.exact_) return *exact_ == *o.exact_;
  return std::fabs(approx_ - o.approx_) <= tol;
}

bool Bits::exceeds(const Bits& o, double tol) const {
  if (exact_ && o.exact_) return *exact_ > *o.exact_;
  return approx_ > o.approx_ + tol;
}

std::string Bits::to_string() const {
  if (exact_) return exact_->get_str();
  std::ostringstream os;
  os << std::setprecision(12) << approx_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Bits& b) {
  return os << b.to_string();
}

}  // namespace infoatoms
