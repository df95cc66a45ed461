#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclex {

/// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
/// denominator) as long as every mutation goes through its operators.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace cyclex
