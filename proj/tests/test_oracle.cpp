#include <catch_amalgamated.hpp>

#include <numeric>

#include "sfdc/algebra/bipoly.hpp"
#include "sfdc/errors.hpp"
#include "sfdc/oracle/oracle.hpp"
#include "sfdc/reduction.hpp"

using namespace sfdc;
using namespace sfdc::oracle;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

SpherePoint point(std::initializer_list<Rational> xs) { return SpherePoint(xs); }

Rational engine_value(const Word& w, const HarmonicEigenfunction& f) {
  return substitute(reduce(w), -f.lambda(), Rational(1), f.n);
}

}  // namespace

TEST_CASE("sphere polynomials reduce modulo the sphere") {
  const SpherePoly norm = squared_norm(3);
  CHECK(norm.reduced() == SpherePoly::constant(3, Rational(1)));
  CHECK(norm.laplacian() == SpherePoly::constant(3, Rational(6)));
  const SpherePoly z = SpherePoly::coordinate(3, 2);
  const SpherePoly z3 = (z * z * z).reduced();
  for (const auto& [m, c] : z3.terms()) CHECK(exponent(m, 2) <= 1);
  const SpherePoint pt = point({q(3, 5), q(0), q(4, 5)});
  CHECK(z3.eval(pt) == q(64, 125));
  CHECK(z.partial(2) == SpherePoly::constant(3, Rational(1)));
  CHECK_THROWS_AS(SpherePoly::coordinate(3, 3), IndexError);
}

TEST_CASE("eigenfunction basis examples") {
  CHECK(eigenspace_dimension(2, 1) == 3);
  CHECK(eigenspace_dimension(2, 2) == 5);
  CHECK(eigenspace_dimension(3, 2) == 9);
  CHECK(eigenspace_dimension(2, 0) == 1);

  const SpherePoly x1 = SpherePoly::coordinate(3, 0);
  const SpherePoly x3 = SpherePoly::coordinate(3, 2);
  CHECK(make_eigenfunction(2, 1, 0).poly == x1);
  CHECK(make_eigenfunction(2, 1, 2).poly == x3);
  CHECK(make_eigenfunction(2, 1, 0).lambda() == Rational(2));
  CHECK(make_eigenfunction(2, 2, 0).lambda() == Rational(6));
  CHECK(make_eigenfunction(3, 1, 0).lambda() == Rational(3));
  CHECK(make_eigenfunction(2, 2, 0).poly == x1 * x1 - squared_norm(3) * q(1, 3));

  CHECK_THROWS_AS(make_eigenfunction(2, 1, 3), IndexError);
  CHECK_THROWS_AS(make_eigenfunction(2, 2, 5), IndexError);
  CHECK_THROWS_AS(make_eigenfunction(1, 1, 0), IndexError);
}

TEST_CASE("basis elements are harmonic and homogeneous") {
  for (int n = 2; n <= 3; ++n) {
    for (int p = 0; p <= 3; ++p) {
      for (std::size_t i = 0; i < eigenspace_dimension(n, p); ++i) {
        const HarmonicEigenfunction f = make_eigenfunction(n, p, i);
        INFO("n=" << n << " p=" << p << " index " << i);
        CHECK(f.poly.laplacian().is_zero());
        CHECK_FALSE(f.poly.is_zero());
        for (const auto& [m, c] : f.poly.terms()) {
          unsigned total = 0;
          for (int v = 0; v < n + 1; ++v) total += exponent(m, v);
          CHECK(total == static_cast<unsigned>(p));
        }
      }
    }
  }
}

TEST_CASE("covariant derivative of a coordinate is its tangential part") {
  const HarmonicEigenfunction f = make_eigenfunction(2, 1, 2);
  const auto tower = derivative_tower(f, 1);
  const SpherePoly x3 = SpherePoly::coordinate(3, 2);
  for (int a = 0; a < 3; ++a) {
    SpherePoly expected = SpherePoly::coordinate(3, a) * x3 * q(-1);
    if (a == 2) expected += SpherePoly::constant(3, Rational(1));
    CHECK(tower[1][static_cast<std::size_t>(a)] == expected.reduced());
  }
}

TEST_CASE("trace of the Hessian is minus lambda times f") {
  for (int n = 2; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      for (std::size_t i = 0; i < eigenspace_dimension(n, p); i += 2) {
        const HarmonicEigenfunction f = make_eigenfunction(n, p, i);
        const auto tower = derivative_tower(f, 2);
        SpherePoly trace(n + 1);
        for (int a = 0; a < n + 1; ++a) {
          const int idx[] = {a, a};
          trace += tower[2].at(idx);
        }
        INFO("n=" << n << " p=" << p << " index " << i);
        CHECK(trace.reduced() == (f.poly * (-f.lambda())).reduced());
      }
    }
  }
}

TEST_CASE("derivative towers are tangential") {
  for (int n = 2; n <= 3; ++n) {
    for (int p = 1; p <= 2; ++p) {
      const auto tower = derivative_tower(make_eigenfunction(n, p, 1), 3);
      REQUIRE(tower.size() == 4);
      for (int m = 1; m <= 3; ++m) {
        CHECK(tower[static_cast<std::size_t>(m)].rank() == m);
        CHECK(is_tangential(tower[static_cast<std::size_t>(m)]));
      }
    }
  }
  AmbientTensorField radial(3, 1);
  for (int a = 0; a < 3; ++a) radial[static_cast<std::size_t>(a)] = SpherePoly::coordinate(3, a);
  CHECK_FALSE(is_tangential(radial));
}

TEST_CASE("sphere points are exact and avoid zeros") {
  const SpherePoint s = stereographic_point({q(1, 2), q(1, 3)});
  Rational norm(0);
  for (const Rational& x : s) norm += x * x;
  CHECK(norm == Rational(1));

  const HarmonicEigenfunction f = make_eigenfunction(3, 2, 1);
  const auto pts = sphere_points(3, 6, &f.poly);
  REQUIRE(pts.size() == 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational sq(0);
    for (const Rational& x : pts[i]) sq += x * x;
    CHECK(sq == Rational(1));
    CHECK(f.poly.eval(pts[i]) != Rational(0));
    for (std::size_t j = 0; j < i; ++j) CHECK(pts[i] != pts[j]);
  }
}

TEST_CASE("contract_word examples") {
  const HarmonicEigenfunction f = make_eigenfunction(2, 1, 2);
  const auto tower = derivative_tower(f, 4);
  CHECK_THROWS_AS(contract_word(tower[2], parse_word("aa"), point({q(3, 5), q(4, 5), q(0)}), f.poly),
                  BasePointError);
  const SpherePoint good = point({q(3, 5), q(0), q(4, 5)});
  CHECK(contract_word(tower[2], parse_word("aa"), good, f.poly) == Rational(-2));
  CHECK(contract_word(tower[4], parse_word("abba"), good, f.poly) == Rational(2));
  CHECK(contract_word(tower[0], Word(), good, f.poly) == Rational(1));
  CHECK_THROWS_AS(contract_word(tower[2], parse_word("abba"), good, f.poly), IndexError);
}

TEST_CASE("word contractions match the engine and do not depend on the point or eigenfunction") {
  for (int n = 2; n <= 3; ++n) {
    for (int p = 1; p <= 2; ++p) {
      for (std::size_t idx = 0; idx < eigenspace_dimension(n, p); idx += 2) {
        const HarmonicEigenfunction f = make_eigenfunction(n, p, idx);
        const auto tower = derivative_tower(f, 4);
        for (const SpherePoint& pt : sphere_points(n, 3, &f.poly)) {
          for (int k = 0; k <= 2; ++k) {
            for (const Word& w : enumerate_words(k)) {
              INFO("n=" << n << " p=" << p << " index " << idx << " word " << w.to_string());
              CHECK(contract_word(tower[static_cast<std::size_t>(2 * k)], w, pt, f.poly) ==
                    engine_value(w, f));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("volume form contractions vanish") {
  CHECK(contract_volume(2, 1, 0, 1) == Rational(0));
  CHECK(contract_volume(2, 2, 1, 7) == Rational(0));
  CHECK(contract_volume(3, 1, 0, 3) == Rational(0));
  CHECK(contract_volume(2, 2, 0, 11, 3) == Rational(0));
}

TEST_CASE("volume contraction detects an antisymmetric tensor") {
  // T_{ab} = Σ_c ε_{cab} x_c is Λ itself on S^2, so T·Λ = 2|x|² = 2.
  AmbientTensorField t(3, 2);
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      SpherePoly comp(3);
      for (int c = 0; c < 3; ++c) {
        if (eps[c][a][b] != 0) comp += SpherePoly::coordinate(3, c) * Rational(eps[c][a][b]);
      }
      const int idx[] = {a, b};
      t[t.flat_index(idx)] = comp;
    }
  }
  const SpherePoint pt = point({q(3, 5), q(0), q(4, 5)});
  CHECK(contract_volume(t, 2, 0, {0, 1}, pt) == Rational(2));
  CHECK(contract_volume(t, 2, 0, {1, 0}, pt) == Rational(-2));
  CHECK_THROWS_AS(contract_volume(t, 2, 1, {0, 1}, pt), IndexError);
}

TEST_CASE("commutation examples") {
  const SpherePoint pt = point({q(3, 5), q(0), q(4, 5)});
  CHECK(commutation_check(2, 2, 3, 2, 0, pt));
  CHECK(commutation_check(2, 2, 3, 1, 0, pt));
  const SpherePoint pt4 = point({q(2, 7), q(3, 7), q(6, 7), q(0)});
  CHECK(commutation_check(3, 1, 4, 2, 1, pt4));
  CHECK_THROWS_AS(commutation_check(2, 2, 3, 3, 0, pt), IndexError);
  CHECK_THROWS_AS(commutation_check(2, 2, 3, 0, 0, pt), IndexError);
}

TEST_CASE("commutation check rejects a corrupted tower") {
  const HarmonicEigenfunction f = make_eigenfunction(2, 2, 0);
  auto tower = derivative_tower(f, 3);
  const SpherePoint pt = point({q(3, 5), q(0), q(4, 5)});
  REQUIRE(commutation_check(tower, 3, 1, pt));
  for (std::size_t c = 0; c < tower[3].size(); ++c) tower[3][c] *= Rational(2);
  CHECK_FALSE(commutation_check(tower, 3, 1, pt));
}
