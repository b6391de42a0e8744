#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pwh {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional leading sign). Decimal notation is rejected so
// that divisibility tests on parameters stay exact.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace pwh
