#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace infoatoms {

using Rational = mpq_class;

/// Parses "num/den", "num" or a plain decimal such as "0.25". The result is
/// canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Returns k when q == 2^-k for some k >= 0.
std::optional<unsigned> dyadic_exponent(const Rational& q);

/// Best rational approximation with denominator at most `max_den` within
/// `tol` of x, or nullopt when none exists.
std::optional<Rational> rationalize(double x, double tol, unsigned long max_den = 1u << 20);

}  // namespace infoatoms
