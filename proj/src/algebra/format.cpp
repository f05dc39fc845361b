#include "sfdc/algebra/format.hpp"

#include <cctype>

namespace sfdc {

namespace {

struct Coefficient {
  bool negative = false;
  std::string body;  // empty for a unit coefficient
};

Coefficient describe(const Rational& c) {
  Coefficient out;
  Rational a = c;
  if (sgn(a) < 0) {
    out.negative = true;
    a = -a;
  }
  if (a == 1) return out;
  out.body = a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")";
  return out;
}

Coefficient describe(const RatFunN& c) {
  if (c.is_constant()) return describe(c.num().coeff(0));
  Coefficient out;
  RatFunN a = c;
  if (FieldTraits<RatFunN>::is_negative_lead(a)) {
    out.negative = true;
    a = -a;
  }
  if (a.is_polynomial()) {
    out.body = "(" + to_string(a.num()) + ")";
  } else {
    out.body = "(" + to_string(a) + ")";
  }
  return out;
}

template <class C>
std::string format_poly(const BiPoly<C>& p, ThetaStyle style) {
  if (p.is_zero()) return "0";
  const std::string theta = style == ThetaStyle::unicode ? "θ" : "t";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Coefficient coef = describe(c);
    std::string body = coef.body;
    auto append = [&](const std::string& piece) {
      if (!body.empty()) body += "*";
      body += piece;
    };
    if (e.k > 0) append(e.k == 1 ? "K" : "K^" + std::to_string(e.k));
    if (e.theta > 0) append(e.theta == 1 ? theta : theta + "^" + std::to_string(e.theta));
    if (body.empty()) body = "1";
    if (first) {
      out += coef.negative ? "-" + body : body;
      first = false;
    } else {
      out += coef.negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

template <class C>
std::string format_elem(const FieldElem<C>& e, ThetaStyle style) {
  if (e.is_polynomial()) return format_poly(e.num(), style);
  return "(" + format_poly(e.num(), style) + ")/(" + format_poly(e.den(), style) + ")";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiagramPoly parse() {
    DiagramPoly value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  DiagramPoly expr() {
    DiagramPoly acc = term();
    while (true) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  DiagramPoly term() {
    DiagramPoly acc = unary();
    while (true) {
      if (accept("*") || accept("·")) {
        acc *= unary();
      } else if (accept("/")) {
        DiagramPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a θ/K-dependent or zero expression");
        RatFunN inv = RatFunN(1) / d.coeff(0, 0);
        acc *= inv;
      } else {
        return acc;
      }
    }
  }

  DiagramPoly unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  DiagramPoly power() {
    DiagramPoly base = atom();
    if (accept("^")) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  DiagramPoly atom() {
    skip_space();
    if (accept("(")) {
      DiagramPoly inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (accept("θ") || accept("t")) return DiagramPoly::theta();
    if (accept("K")) return DiagramPoly::curvature();
    if (accept("n")) return DiagramPoly(RatFunN::n());
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, symbol or '('");
    mpz_class v(std::string(text_.substr(start, pos_ - start)));
    return DiagramPoly(RatFunN(Rational(v)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

nlohmann::json npoly_json(const NPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

NPoly npoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coefficients must be rational strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return NPoly(std::move(coeffs));
}

}  // namespace

std::string to_string(const DiagramPoly& p, ThetaStyle style) { return format_poly(p, style); }
std::string to_string(const NumericPoly& p, ThetaStyle style) { return format_poly(p, style); }
std::string to_string(const SymbolicElem& e, ThetaStyle style) { return format_elem(e, style); }
std::string to_string(const NumericElem& e, ThetaStyle style) { return format_elem(e, style); }

DiagramPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

nlohmann::json to_json(const RatFunN& r) {
  return {{"num_coeffs", npoly_json(r.num())}, {"den_coeffs", npoly_json(r.den())}};
}

RatFunN ratfun_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num_coeffs") || !j.contains("den_coeffs")) {
    throw ParseError("rational function JSON needs num_coeffs and den_coeffs");
  }
  NPoly den = npoly_from_json(j.at("den_coeffs"));
  if (den.is_zero()) throw ParseError("zero denominator in JSON");
  return RatFunN(npoly_from_json(j.at("num_coeffs")), std::move(den));
}

nlohmann::json to_json(const DiagramPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json term = to_json(c);
    term["a"] = e.theta;
    term["b"] = e.k;
    out.push_back(std::move(term));
  }
  return out;
}

DiagramPoly diagram_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  DiagramPoly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("a") || !term.contains("b")) {
      throw ParseError("polynomial term needs a and b");
    }
    out.add_term({term.at("a").get<unsigned>(), term.at("b").get<unsigned>()},
                 ratfun_from_json(term));
  }
  return out;
}

}  // namespace sfdc
