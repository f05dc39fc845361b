#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "sfdc/algebra/ratfun.hpp"
#include "sfdc/algebra/upoly.hpp"
#include "sfdc/errors.hpp"

namespace sfdc {

// Exponents of a monomial θ^theta · K^k.
struct Exponents {
  unsigned theta = 0;
  unsigned k = 0;
  auto operator<=>(const Exponents&) const = default;
};

// A polynomial in the two symbols θ and K with coefficients in a field C.
// Terms are kept in canonical order: θ-degree descending, then K-degree
// descending; zero coefficients are never stored.
template <class C>
class BiPoly {
 public:
  using Traits = FieldTraits<C>;
  using Terms = std::map<Exponents, C, std::greater<>>;

  BiPoly() = default;
  explicit BiPoly(C constant) { add_term({0, 0}, std::move(constant)); }

  static BiPoly monomial(C c, unsigned theta_deg, unsigned k_deg) {
    BiPoly p;
    p.add_term({theta_deg, k_deg}, std::move(c));
    return p;
  }
  static BiPoly theta() { return monomial(Traits::one(), 1, 0); }
  static BiPoly curvature() { return monomial(Traits::one(), 0, 1); }
  static BiPoly one() { return BiPoly(Traits::one()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           Traits::is_one(terms_.begin()->second);
  }

  C coeff(unsigned theta_deg, unsigned k_deg) const {
    auto it = terms_.find({theta_deg, k_deg});
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  // Leading term in lex order with θ > K.
  const std::pair<const Exponents, C>& leading() const { return *terms_.begin(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.theta + e.k));
    return d;
  }
  int theta_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.theta);
  }
  int k_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.k));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.theta + terms_.begin()->first.k;
    for (const auto& [e, c] : terms_) {
      if (e.theta + e.k != d) return false;
    }
    return true;
  }
  // θ- and K-free, i.e. an element of the coefficient field.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
  }

  void add_term(Exponents e, C c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, std::move(c));
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BiPoly& operator*=(const C& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend BiPoly operator*(BiPoly a, const C& c) { return a *= c; }
  friend BiPoly operator*(const C& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        C c = ca;
        c *= cb;
        out.add_term({ea.theta + eb.theta, ea.k + eb.k}, std::move(c));
      }
    }
    return out;
  }

  BiPoly pow(unsigned e) const {
    BiPoly out = one();
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  C eval(const C& theta_value, const C& k_value) const {
    C acc = Traits::zero();
    for (const auto& [e, c] : terms_) {
      C t = c;
      for (unsigned i = 0; i < e.theta; ++i) t *= theta_value;
      for (unsigned i = 0; i < e.k; ++i) t *= k_value;
      acc += t;
    }
    return acc;
  }

  template <class D, class Fn>
  BiPoly<D> map_coeffs(Fn&& fn) const {
    BiPoly<D> out;
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  // Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<BiPoly> exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    BiPoly q;
    BiPoly r = a;
    const auto& [lb, cb] = b.leading();
    C inv = Traits::one();
    inv /= cb;
    while (!r.is_zero()) {
      const auto& [lr, cr] = r.leading();
      if (lr.theta < lb.theta || lr.k < lb.k) return std::nullopt;
      C c = cr;
      c *= inv;
      BiPoly step = monomial(std::move(c), lr.theta - lb.theta, lr.k - lb.k);
      r -= step * b;
      q += step;
    }
    return q;
  }

 private:
  Terms terms_;
};

template <class C>
BiPoly<C> divide_or_throw(const BiPoly<C>& a, const BiPoly<C>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw NotDivisibleError("polynomial is not an exact multiple of the divisor");
  return *std::move(q);
}

// Restriction to K = 1 as a univariate polynomial in θ.
template <class C>
UPoly<C> dehomogenize(const BiPoly<C>& p) {
  std::vector<C> coeffs(p.is_zero() ? 0 : static_cast<std::size_t>(p.theta_degree()) + 1,
                        FieldTraits<C>::zero());
  for (const auto& [e, c] : p.terms()) coeffs[e.theta] += c;
  return UPoly<C>(std::move(coeffs));
}

// Inverse of dehomogenize for a target total degree >= deg(u).
template <class C>
BiPoly<C> homogenize(const UPoly<C>& u, unsigned degree) {
  BiPoly<C> out;
  for (std::size_t a = 0; a < u.coeffs().size(); ++a) {
    out.add_term({static_cast<unsigned>(a), degree - static_cast<unsigned>(a)}, u.coeffs()[a]);
  }
  return out;
}

// Gcd of two homogeneous polynomials, normalized to leading coefficient 1.
// Homogeneous bivariate polynomials factor through their K = 1 restriction,
// so a univariate Euclid over C suffices.
template <class C>
BiPoly<C> homogeneous_gcd(const BiPoly<C>& a, const BiPoly<C>& b) {
  if (!a.is_homogeneous() || !b.is_homogeneous()) {
    throw GradeError("gcd requires (θ,K)-homogeneous polynomials");
  }
  auto normalize = [](const BiPoly<C>& p) {
    C inv = FieldTraits<C>::one();
    inv /= p.leading().second;
    return p * inv;
  };
  if (a.is_zero()) return b.is_zero() ? b : normalize(b);
  if (b.is_zero()) return normalize(a);
  UPoly<C> ua = dehomogenize(a);
  UPoly<C> ub = dehomogenize(b);
  unsigned ka = static_cast<unsigned>(a.total_degree() - ua.degree());
  unsigned kb = static_cast<unsigned>(b.total_degree() - ub.degree());
  UPoly<C> g = gcd(ua, ub);
  unsigned e = static_cast<unsigned>(g.degree());
  return homogenize(g, e) * BiPoly<C>::monomial(FieldTraits<C>::one(), 0, std::min(ka, kb));
}

using DiagramPoly = BiPoly<RatFunN>;
using NumericPoly = BiPoly<Rational>;

// Evaluates every Q(n) coefficient at an integer dimension.
NumericPoly substitute_n(const DiagramPoly& p, long n_value);

// Exact value at (θ, K, n); throws PoleError when n hits a pole.
Rational substitute(const DiagramPoly& p, const Rational& theta, const Rational& k_const,
                    long n_value);

// Embeds a polynomial with rational coefficients into Q(n)[θ, K].
DiagramPoly lift(const NumericPoly& p);

}  // namespace sfdc
