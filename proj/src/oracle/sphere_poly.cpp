#include "sfdc/oracle/sphere_poly.hpp"

#include <mutex>

#include "sfdc/errors.hpp"

namespace sfdc::oracle {

namespace {

void check_variables(int variables) {
  if (variables < 1 || variables > kMaxVariables) {
    throw IndexError("ambient dimension must be between 1 and " + std::to_string(kMaxVariables));
  }
}

// (1 − Σ_{i<N} x_i²)^j, cached per (N, j).
const SpherePoly& one_minus_s_power(int variables, unsigned j) {
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, SpherePoly> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(variables, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SpherePoly base = SpherePoly::constant(variables, Rational(1));
  for (int i = 0; i + 1 < variables; ++i) base.add_term(2 * unit_monomial(i), Rational(-1));
  SpherePoly acc = SpherePoly::constant(variables, Rational(1));
  for (unsigned t = 0; t < j; ++t) acc = acc * base;
  return cache.emplace(key, std::move(acc)).first->second;
}

}  // namespace

SpherePoly SpherePoly::constant(int variables, const Rational& c) {
  check_variables(variables);
  SpherePoly p(variables);
  p.add_term(0, c);
  return p;
}

SpherePoly SpherePoly::coordinate(int variables, int var) {
  check_variables(variables);
  if (var < 0 || var >= variables) throw IndexError("coordinate index out of range");
  SpherePoly p(variables);
  p.add_term(unit_monomial(var), Rational(1));
  return p;
}

int SpherePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int total = 0;
    for (int v = 0; v < vars_; ++v) total += static_cast<int>(exponent(m, v));
    d = std::max(d, total);
  }
  return d;
}

void SpherePoly::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SpherePoly& SpherePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) {
  SpherePoly out(std::max(a.vars_, b.vars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

SpherePoly SpherePoly::times_coordinate(int var) const {
  SpherePoly out(vars_);
  const Monomial shift = unit_monomial(var);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m + shift, c);
  return out;
}

SpherePoly SpherePoly::partial(int var) const {
  SpherePoly out(vars_);
  const Monomial shift = unit_monomial(var);
  for (const auto& [m, c] : terms_) {
    unsigned e = exponent(m, var);
    if (e == 0) continue;
    out.add_term(m - shift, c * e);
  }
  return out;
}

SpherePoly SpherePoly::laplacian() const {
  SpherePoly out(vars_);
  for (int v = 0; v < vars_; ++v) out += partial(v).partial(v);
  return out;
}

SpherePoly SpherePoly::reduced() const {
  const int last = vars_ - 1;
  SpherePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = exponent(m, last);
    if (e < 2) {
      out.add_term(m, c);
      continue;
    }
    const Monomial base = m - (e - e % 2) * unit_monomial(last);
    for (const auto& [mp, cp] : one_minus_s_power(vars_, e / 2).terms()) out.add_term(base + mp, c * cp);
  }
  return out;
}

Rational SpherePoly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != vars_) throw IndexError("point dimension mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < vars_; ++v) {
      for (unsigned e = exponent(m, v); e > 0; --e) t *= point[static_cast<std::size_t>(v)];
    }
    acc += t;
  }
  return acc;
}

std::string SpherePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    std::string body;
    for (int v = 0; v < vars_; ++v) {
      unsigned e = exponent(m, v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(v + 1);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += a.get_str();
    } else {
      out += a == 1 ? body : a.get_str() + "*" + body;
    }
  }
  return out;
}

SpherePoly squared_norm(int variables) {
  SpherePoly p(variables);
  for (int v = 0; v < variables; ++v) p.add_term(2 * unit_monomial(v), Rational(1));
  return p;
}

}  // namespace sfdc::oracle
