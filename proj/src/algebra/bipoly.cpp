#include "sfdc/algebra/bipoly.hpp"

namespace sfdc {

NumericPoly substitute_n(const DiagramPoly& p, long n_value) {
  const Rational n(n_value);
  return p.map_coeffs<Rational>([&](const RatFunN& c) { return c.eval(n); });
}

Rational substitute(const DiagramPoly& p, const Rational& theta, const Rational& k_const,
                    long n_value) {
  return substitute_n(p, n_value).eval(theta, k_const);
}

DiagramPoly lift(const NumericPoly& p) {
  return p.map_coeffs<RatFunN>([](const Rational& c) { return RatFunN(c); });
}

}  // namespace sfdc
