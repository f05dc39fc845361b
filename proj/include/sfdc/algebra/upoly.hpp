#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfdc/algebra/rational.hpp"

namespace sfdc {

// Dense univariate polynomial over a field F, coefficients in ascending
// order with no trailing zeros (the zero polynomial has no coefficients).
template <class F>
class UPoly {
 public:
  using Traits = FieldTraits<F>;

  UPoly() = default;
  explicit UPoly(F constant) {
    if (!Traits::is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(F c, std::size_t degree) {
    std::vector<F> v(degree + 1, Traits::zero());
    v[degree] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly variable() { return monomial(Traits::one(), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coeffs() const { return coeffs_; }
  F coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Traits::zero();
  }
  const F& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const {
    return coeffs_.size() == 1 && Traits::is_one(coeffs_[0]);
  }

  F eval(const F& x) const {
    F acc = Traits::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly& scale(const F& c) {
    if (Traits::is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (F& x : coeffs_) x *= c;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (F& x : a.coeffs_) x = -x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        F t = a.coeffs_[i];
        t *= b.coeffs_[j];
        out[i + j] += t;
      }
    }
    return UPoly(std::move(out));
  }

  bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division; b must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = a;
    if (r.degree() < b.degree()) return {UPoly(), r};
    std::vector<F> q(static_cast<std::size_t>(r.degree() - b.degree() + 1),
                     Traits::zero());
    F inv_lead = Traits::one();
    inv_lead /= b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      F c = r.leading();
      c *= inv_lead;
      for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        F t = c;
        t *= b.coeffs_[i];
        r.coeffs_[i + shift] -= t;
      }
      // The leading coefficient cancels exactly; drop it even if F's
      // arithmetic would leave a representation artifact.
      r.coeffs_.pop_back();
      r.trim();
      q[shift] = std::move(c);
    }
    return {UPoly(std::move(q)), r};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly out = *this;
    F inv = Traits::one();
    inv /= leading();
    out.scale(inv);
    out.coeffs_.back() = Traits::one();
    return out;
  }

  // Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

}  // namespace sfdc
