#include "infoatoms/rational.hpp"

#include <cmath>
#include <string>

#include "infoatoms/error.hpp"

namespace infoatoms {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || digits == "-") {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  mpz_class z;
  if (z.set_str(digits, 10) != 0) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  return z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    mpz_class whole = dot == 0 ? mpz_class(0) : parse_integer(s.substr(0, dot), text);
    mpz_class frac_part = frac.empty() ? mpz_class(0) : parse_integer(frac, text);
    if (frac_part < 0) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const bool negative = !s.empty() && s.front() == '-';
    Rational q(whole * scale + (negative ? -frac_part : frac_part), scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::optional<unsigned> dyadic_exponent(const Rational& q) {
  if (q.get_num() != 1) return std::nullopt;
  const mpz_class& den = q.get_den();
  if (den <= 0) return std::nullopt;
  // power of two iff exactly one bit set
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0));
}

std::optional<Rational> rationalize(double x, double tol, unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction convergents
  const double target = x;
  long double value = x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(value);
    const mpz_class ai(static_cast<double>(a));
    const mpz_class p2 = ai * p1 + p0;
    const mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational c(p1, q1);
    c.canonicalize();
    if (std::fabs(c.get_d() - target) <= tol) return c;
    const long double rem = value - a;
    if (rem == 0) break;
    value = 1.0L / rem;
  }
  return std::nullopt;
}

}  // namespace infoatoms
