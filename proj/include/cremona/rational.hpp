#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

// Exact rationals. mpq_class keeps values in lowest terms with a positive
// denominator once canonicalize() has run; every helper here returns
// canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

// Raised for mathematical preconditions that fail on valid input
// (coincident lines, inadmissible base schemes, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed text / JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cremona
