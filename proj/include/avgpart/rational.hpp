#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace avgpart {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws InvalidInput when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "num/den" or an integer ("3/2", "-4", "2"). Decimal notation and
/// anything else is rejected with ParseError so that values stay exact.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form, always with an explicit denominator ("3/1").
std::string format_rational(const Rational& q);

Rational rational_max(const Rational& a, const Rational& b);

/// Smallest integer >= q.
std::int64_t ceil_to_int(const Rational& q);

}  // namespace avgpart
