#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sfdc/algebra/rational.hpp"

namespace sfdc::oracle {

// Exponent vector of up to 8 variables, 8 bits per exponent. Multiplying
// monomials is adding keys.
using Monomial = std::uint64_t;

inline constexpr int kMaxVariables = 8;

inline unsigned exponent(Monomial m, int var) { return static_cast<unsigned>((m >> (8 * var)) & 0xffu); }
inline Monomial unit_monomial(int var) { return Monomial{1} << (8 * var); }

// Polynomial with rational coefficients in the ambient coordinates
// x_1..x_N of R^N.
class SpherePoly {
 public:
  explicit SpherePoly(int variables = 0) : vars_(variables) {}

  static SpherePoly constant(int variables, const Rational& c);
  static SpherePoly coordinate(int variables, int var);

  int variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; −1 for zero.
  int degree() const;

  void add_term(Monomial m, const Rational& c);

  SpherePoly& operator+=(const SpherePoly& o);
  SpherePoly& operator-=(const SpherePoly& o);
  SpherePoly& operator*=(const Rational& c);
  friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
  friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
  friend SpherePoly operator*(SpherePoly a, const Rational& c) { return a *= c; }
  friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b);
  bool operator==(const SpherePoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  SpherePoly times_coordinate(int var) const;
  SpherePoly partial(int var) const;
  SpherePoly laplacian() const;

  // Normal form modulo Σ x_i² − 1: x_N² is rewritten as 1 − Σ_{i<N} x_i²
  // until every term has x_N-degree at most 1.
  SpherePoly reduced() const;

  Rational eval(std::span<const Rational> point) const;

  std::string to_string() const;

 private:
  int vars_;
  std::map<Monomial, Rational> terms_;
};

// |x|² = Σ x_i².
SpherePoly squared_norm(int variables);

}  // namespace sfdc::oracle
