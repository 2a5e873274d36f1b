#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dk {

/// Exact rational; gmp keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const Vector& v);

Rational factorial(unsigned n);

}  // namespace dk
