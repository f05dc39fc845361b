#include "sfdc/algebra/ratfun.hpp"

#include <cctype>

#include "sfdc/errors.hpp"

namespace sfdc {

std::string to_string(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i > start && i + 1 < s.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (start == s.size()) throw ParseError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (slash && sgn(q.get_den()) == 0) throw ParseError("zero denominator");
  q.canonicalize();
  return q;
}

RatFunN::RatFunN(NPoly num, NPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunN RatFunN::n() { return RatFunN(NPoly::variable()); }

void RatFunN::normalize() {
  if (num_.is_zero()) {
    den_ = NPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    NPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (!den_.is_one()) {
    Rational inv = 1 / den_.leading();
    num_.scale(inv);
    den_ = den_.monic();
  }
}

Rational RatFunN::eval(const Rational& n) const {
  Rational d = den_.eval(n);
  if (sgn(d) == 0) {
    throw PoleError("denominator " + to_string(den_) + " vanishes at n = " +
                    to_string(n));
  }
  return num_.eval(n) / d;
}

RatFunN& RatFunN::operator+=(const RatFunN& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = NPoly(Rational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunN& RatFunN::operator-=(const RatFunN& o) { return *this += -o; }

RatFunN& RatFunN::operator*=(const RatFunN& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunN();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunN& RatFunN::operator/=(const RatFunN& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(n)");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string to_string(const NPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(static_cast<std::size_t>(d));
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    bool unit = (c == 1);
    if (d == 0) {
      out += to_string(c);
      continue;
    }
    if (!unit) out += to_string(c) + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::string to_string(const RatFunN& r) {
  if (r.is_polynomial()) return to_string(r.num());
  std::string num = to_string(r.num());
  if (!r.num().is_constant() || r.num().coeff(0).get_den() != 1) num = "(" + num + ")";
  return num + "/(" + to_string(r.den()) + ")";
}

}  // namespace sfdc
