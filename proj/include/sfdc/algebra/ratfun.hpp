#pragma once

#include <string>

#include "sfdc/algebra/rational.hpp"
#include "sfdc/algebra/upoly.hpp"

namespace sfdc {

// Polynomials in the dimension symbol n.
using NPoly = UPoly<Rational>;

// An element of Q(n): numerator / denominator, coprime, denominator monic.
class RatFunN {
 public:
  RatFunN() : den_(Rational(1)) {}
  RatFunN(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  explicit RatFunN(const Rational& value) : num_(value), den_(Rational(1)) {}
  explicit RatFunN(NPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunN(NPoly num, NPoly den);

  // The symbol n itself.
  static RatFunN n();

  const NPoly& num() const { return num_; }
  const NPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  // Value at a rational n; throws PoleError when the denominator vanishes.
  Rational eval(const Rational& n) const;

  RatFunN& operator+=(const RatFunN& o);
  RatFunN& operator-=(const RatFunN& o);
  RatFunN& operator*=(const RatFunN& o);
  RatFunN& operator/=(const RatFunN& o);

  friend RatFunN operator+(RatFunN a, const RatFunN& b) { return a += b; }
  friend RatFunN operator-(RatFunN a, const RatFunN& b) { return a -= b; }
  friend RatFunN operator*(RatFunN a, const RatFunN& b) { return a *= b; }
  friend RatFunN operator/(RatFunN a, const RatFunN& b) { return a /= b; }
  friend RatFunN operator-(RatFunN a) {
    a.num_ = -a.num_;
    return a;
  }

  bool operator==(const RatFunN& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  void normalize();

  NPoly num_;
  NPoly den_;
};

template <>
struct FieldTraits<RatFunN> {
  static RatFunN zero() { return RatFunN(); }
  static RatFunN one() { return RatFunN(1); }
  static bool is_zero(const RatFunN& x) { return x.is_zero(); }
  static bool is_one(const RatFunN& x) { return x.is_one(); }
  static bool is_negative_lead(const RatFunN& x) {
    return !x.is_zero() && sgn(x.num().leading()) < 0;
  }
};

// Compact form with descending powers, e.g. "n^2-3*n+2".
std::string to_string(const NPoly& p, const std::string& var = "n");

// "p(n)" or "(p(n))/(q(n))"; constants print as rationals.
std::string to_string(const RatFunN& r);

}  // namespace sfdc
