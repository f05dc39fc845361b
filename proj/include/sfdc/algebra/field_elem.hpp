#pragma once

#include "sfdc/algebra/bipoly.hpp"

namespace sfdc {

// An element of the fraction field of C[θ, K], kept reduced: numerator and
// denominator coprime, denominator with leading coefficient 1. Proper
// fractions must be (θ,K)-homogeneous, which every quantity produced by the
// graded linear systems here is; polynomials (denominator 1) are unrestricted.
template <class C>
class FieldElem {
 public:
  using Poly = BiPoly<C>;

  FieldElem() : den_(Poly::one()) {}
  explicit FieldElem(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
  FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_homogeneous() const { return num_.is_homogeneous() && den_.is_homogeneous(); }
  // Degree of a homogeneous fraction: deg(num) - deg(den).
  int degree() const { return num_.total_degree() - den_.total_degree(); }

  FieldElem& operator+=(const FieldElem& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_one()) normalize();
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) { return *this += -o; }
  FieldElem& operator*=(const FieldElem& o) {
    num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  FieldElem& operator/=(const FieldElem& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in the fraction field");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
  }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator-(FieldElem a) {
    a.num_ = -a.num_;
    return a;
  }

  bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }

  template <class D, class Fn>
  FieldElem<D> map_coeffs(Fn&& fn) const {
    return FieldElem<D>(num_.template map_coeffs<D>(fn), den_.template map_coeffs<D>(fn));
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    if (!den_.is_constant()) {
      Poly g = homogeneous_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_or_throw(num_, g);
        den_ = divide_or_throw(den_, g);
      }
    }
    const C& lead = den_.leading().second;
    if (!FieldTraits<C>::is_one(lead)) {
      C inv = FieldTraits<C>::one();
      inv /= lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

using SymbolicElem = FieldElem<RatFunN>;
using NumericElem = FieldElem<Rational>;

}  // namespace sfdc
