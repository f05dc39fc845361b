#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sfdc {

using Rational = mpq_class;

// Canonical "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional sign; throws ParseError.
Rational parse_rational(std::string_view text);

// Field operations the generic polynomial code needs from a coefficient type.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static bool is_negative_lead(const Rational& x) { return sgn(x) < 0; }
};

}  // namespace sfdc
