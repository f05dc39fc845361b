#include "sfdc/oracle/oracle.hpp"

#include <random>
#include <set>

#include "sfdc/errors.hpp"

namespace sfdc::oracle {

namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

// Exponent vectors of degree p in `vars` variables with the last exponent at
// most 1, descending lexicographic.
void harmonic_exponents(int vars, int var, int remaining, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (var == vars - 1) {
    if (remaining <= 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.push_back(e);
    harmonic_exponents(vars, var + 1, remaining - e, current, out);
    current.pop_back();
  }
}

// Harmonic part of a homogeneous polynomial q of degree p in N variables:
// Σ_j (−1)^j |x|^{2j} Δ^j q / (2^j j! ∏_{i=1}^{j} (N + 2p − 2i − 2)).
SpherePoly harmonic_projection(const SpherePoly& q, int vars, int p) {
  SpherePoly out(vars);
  SpherePoly lap = q;
  SpherePoly norm_power = SpherePoly::constant(vars, Rational(1));
  const SpherePoly norm = squared_norm(vars);
  Rational coeff(1);
  for (int j = 0; !lap.is_zero(); ++j) {
    if (j > 0) {
      coeff /= Rational(-2 * j * (vars + 2 * p - 2 * j - 2));
      norm_power = norm_power * norm;
    }
    out += norm_power * lap * coeff;
    lap = lap.laplacian();
  }
  return out;
}

std::vector<std::vector<Rational>> projector(const SpherePoint& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) p[a][b] = (a == b ? Rational(1) : Rational(0)) - q[a] * q[b];
  }
  return p;
}

std::vector<int> digits(std::size_t flat, std::size_t base, int rank) {
  std::vector<int> out(static_cast<std::size_t>(rank));
  for (int s = rank; s-- > 0;) {
    out[static_cast<std::size_t>(s)] = static_cast<int>(flat % base);
    flat /= base;
  }
  return out;
}

// Sign of the permutation listed in idx, 0 if an entry repeats.
int levi_civita(const std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  }
  return sign;
}

// Full contraction of a component array with one vector per slot.
Rational apply(const std::vector<Rational>& comps, std::size_t dim, const std::vector<std::vector<Rational>>& vecs) {
  std::vector<Rational> cur = comps;
  for (std::size_t s = vecs.size(); s-- > 0;) {
    std::vector<Rational> next(cur.size() / dim);
    for (std::size_t base = 0; base < next.size(); ++base) {
      Rational acc = 0;
      for (std::size_t a = 0; a < dim; ++a) acc += cur[base * dim + a] * vecs[s][a];
      next[base] = acc;
    }
    cur = std::move(next);
  }
  return cur.at(0);
}

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational acc = 0;
  for (std::size_t a = 0; a < u.size(); ++a) acc += u[a] * v[a];
  return acc;
}

std::vector<int> seeded_permutation(std::size_t size, std::uint64_t seed) {
  std::vector<int> perm(size);
  for (std::size_t s = 0; s < size; ++s) perm[s] = static_cast<int>(s);
  std::mt19937_64 rng(seed);
  for (std::size_t s = size; s > 1; --s) std::swap(perm[s - 1], perm[rng() % s]);
  return perm;
}

}  // namespace

std::size_t eigenspace_dimension(int n, int p) {
  if (n < 1 || p < 0) return 0;
  const int vars = n + 1;
  return static_cast<std::size_t>(binomial(p + vars - 2, vars - 2) + (p >= 1 ? binomial(p - 1 + vars - 2, vars - 2) : 0));
}

HarmonicEigenfunction make_eigenfunction(int n, int p, std::size_t index) {
  if (n < 2 || p < 0) throw IndexError("eigenfunctions need n >= 2 and p >= 0");
  const int vars = n + 1;
  std::vector<std::vector<int>> exps;
  std::vector<int> current;
  harmonic_exponents(vars, 0, p, current, exps);
  if (index >= exps.size()) {
    throw IndexError("eigenfunction index " + std::to_string(index) + " beyond eigenspace dimension " +
                     std::to_string(exps.size()));
  }
  Monomial m = 0;
  for (int v = 0; v < vars; ++v) m += static_cast<Monomial>(exps[index][static_cast<std::size_t>(v)]) * unit_monomial(v);
  SpherePoly q(vars);
  q.add_term(m, Rational(1));
  HarmonicEigenfunction f{n, p, harmonic_projection(q, vars, p)};
  if (!f.poly.laplacian().is_zero() || f.poly.is_zero()) {
    throw std::logic_error("harmonic projection failed for index " + std::to_string(index));
  }
  return f;
}

AmbientTensorField::AmbientTensorField(int ambient_dim, int rank)
    : dim_(ambient_dim), rank_(rank), components_(ipow(static_cast<std::size_t>(ambient_dim), rank), SpherePoly(ambient_dim)) {}

AmbientTensorField AmbientTensorField::scalar(const SpherePoly& f) {
  AmbientTensorField t(f.variables(), 0);
  t.components_[0] = f.reduced();
  return t;
}

std::size_t AmbientTensorField::stride(int slot) const {
  return ipow(static_cast<std::size_t>(dim_), rank_ - 1 - slot);
}

std::size_t AmbientTensorField::flat_index(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank_) throw IndexError("tensor index has the wrong rank");
  std::size_t flat = 0;
  for (int a : index) {
    if (a < 0 || a >= dim_) throw IndexError("tensor index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(a);
  }
  return flat;
}

const SpherePoly& AmbientTensorField::at(std::span<const int> index) const { return components_[flat_index(index)]; }

AmbientTensorField covariant_derivative(const AmbientTensorField& t) {
  const int dim = t.ambient_dim();
  AmbientTensorField u(dim, t.rank() + 1);
  const std::size_t block = t.size();
  for (int c = 0; c < dim; ++c) {
    for (std::size_t flat = 0; flat < block; ++flat) u[static_cast<std::size_t>(c) * block + flat] = t[flat].partial(c);
  }
  const auto udim = static_cast<std::size_t>(dim);
  for (int s = 0; s <= t.rank(); ++s) {
    const std::size_t st = u.stride(s);
    for (std::size_t base = 0; base < u.size(); ++base) {
      if ((base / st) % udim != 0) continue;
      SpherePoly v(dim);
      for (int b = 0; b < dim; ++b) v += u[base + static_cast<std::size_t>(b) * st].times_coordinate(b);
      v = v.reduced();
      for (int a = 0; a < dim; ++a) {
        SpherePoly& comp = u[base + static_cast<std::size_t>(a) * st];
        comp -= v.times_coordinate(a);
        comp = comp.reduced();
      }
    }
  }
  return u;
}

std::vector<AmbientTensorField> derivative_tower(const HarmonicEigenfunction& f, int m) {
  std::vector<AmbientTensorField> tower;
  tower.push_back(AmbientTensorField::scalar(f.poly));
  for (int j = 1; j <= m; ++j) tower.push_back(covariant_derivative(tower.back()));
  return tower;
}

bool is_tangential(const AmbientTensorField& t) {
  const auto dim = static_cast<std::size_t>(t.ambient_dim());
  for (int s = 0; s < t.rank(); ++s) {
    const std::size_t st = t.stride(s);
    for (std::size_t base = 0; base < t.size(); ++base) {
      if ((base / st) % dim != 0) continue;
      SpherePoly v(t.ambient_dim());
      for (std::size_t b = 0; b < dim; ++b) v += t[base + b * st].times_coordinate(static_cast<int>(b));
      if (!v.reduced().is_zero()) return false;
    }
  }
  return true;
}

SpherePoint stereographic_point(const std::vector<Rational>& t) {
  Rational norm = 0;
  for (const Rational& x : t) norm += x * x;
  const Rational den = norm + 1;
  SpherePoint q;
  for (const Rational& x : t) q.push_back(2 * x / den);
  q.push_back((norm - 1) / den);
  return q;
}

std::vector<SpherePoint> sphere_points(int n, std::size_t count, const SpherePoly* avoid) {
  static const std::vector<Rational> values = {Rational(1, 2), Rational(-2, 3), Rational(3, 4),  Rational(1, 3),
                                               Rational(-3, 2), Rational(2, 5),  Rational(5, 7),  Rational(-1, 4),
                                               Rational(2),     Rational(-4, 5), Rational(3, 5),  Rational(7, 3)};
  std::vector<SpherePoint> out;
  std::set<SpherePoint> seen;
  for (std::size_t r = 0; out.size() < count; ++r) {
    if (r > 10000) throw std::logic_error("could not find enough sphere points");
    std::vector<Rational> t;
    for (int i = 0; i < n; ++i) t.push_back(values[(r + 5 * static_cast<std::size_t>(i) + r / values.size()) % values.size()]);
    SpherePoint q = stereographic_point(t);
    if (avoid != nullptr && sgn(avoid->eval(q)) == 0) continue;
    if (!seen.insert(q).second) continue;
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Rational> evaluate_at(const AmbientTensorField& t, const SpherePoint& q) {
  if (static_cast<int>(q.size()) != t.ambient_dim()) throw IndexError("point dimension mismatch");
  std::vector<Rational> out;
  out.reserve(t.size());
  for (std::size_t flat = 0; flat < t.size(); ++flat) out.push_back(t[flat].eval(q));
  return out;
}

Rational contract_word(const AmbientTensorField& t, const Word& w, const SpherePoint& q, const SpherePoly& f) {
  if (static_cast<std::size_t>(t.rank()) != w.size()) {
    throw IndexError("tensor rank " + std::to_string(t.rank()) + " does not match word length " +
                     std::to_string(w.size()));
  }
  const Rational fq = f.eval(q);
  if (sgn(fq) == 0) throw BasePointError("f vanishes at the chosen sphere point");
  const std::vector<Rational> vals = evaluate_at(t, q);
  const auto P = projector(q);
  const std::vector<PositionPair> pairs = w.pairing();
  Rational acc = 0;
  for (std::size_t flat = 0; flat < vals.size(); ++flat) {
    if (sgn(vals[flat]) == 0) continue;
    const std::vector<int> idx = digits(flat, q.size(), t.rank());
    Rational term = vals[flat];
    for (const PositionPair& pp : pairs) {
      term *= P[static_cast<std::size_t>(idx[pp.first - 1])][static_cast<std::size_t>(idx[pp.second - 1])];
      if (sgn(term) == 0) break;
    }
    acc += term;
  }
  return acc / fq;
}

Rational contract_volume(const AmbientTensorField& t, int n, int k, const std::vector<int>& perm,
                         const SpherePoint& q) {
  const int m = 2 * k + n;
  if (t.rank() != m || static_cast<int>(perm.size()) != m || static_cast<int>(q.size()) != n + 1) {
    throw IndexError("volume contraction needs a rank 2k+n tensor and a matching permutation");
  }
  const auto P = projector(q);
  const std::vector<Rational> vals = evaluate_at(t, q);
  Rational acc = 0;
  std::vector<int> eps_index(static_cast<std::size_t>(n) + 1);
  for (std::size_t flat = 0; flat < vals.size(); ++flat) {
    if (sgn(vals[flat]) == 0) continue;
    const std::vector<int> idx = digits(flat, q.size(), m);
    Rational term = vals[flat];
    for (int j = 0; j < k; ++j) {
      term *= P[static_cast<std::size_t>(idx[static_cast<std::size_t>(perm[2 * j])])]
               [static_cast<std::size_t>(idx[static_cast<std::size_t>(perm[2 * j + 1])])];
    }
    if (sgn(term) == 0) continue;
    Rational lambda = 0;
    for (int b = 0; b <= n; ++b) {
      eps_index[0] = b;
      for (int s = 0; s < n; ++s) eps_index[static_cast<std::size_t>(s) + 1] = idx[static_cast<std::size_t>(perm[2 * k + s])];
      int sign = levi_civita(eps_index);
      if (sign != 0) lambda += sign * q[static_cast<std::size_t>(b)];
    }
    acc += term * lambda;
  }
  return acc;
}

Rational contract_volume(int n, int p, int k, std::uint64_t seed, std::size_t eigen_index) {
  const HarmonicEigenfunction f = make_eigenfunction(n, p, eigen_index);
  const int m = 2 * k + n;
  const auto tower = derivative_tower(f, m);
  const SpherePoint q = sphere_points(n, 1, &f.poly).front();
  return contract_volume(tower[static_cast<std::size_t>(m)], n, k, seeded_permutation(static_cast<std::size_t>(m), seed), q);
}

bool commutation_check(const std::vector<AmbientTensorField>& tower, int m, int i, const SpherePoint& q) {
  if (m < 2 || i < 1 || i > m - 1 || static_cast<int>(tower.size()) <= m) {
    throw IndexError("commutation check needs 1 <= i <= m-1 and a tower of height m");
  }
  const std::size_t dim = q.size();
  const std::vector<Rational> top = evaluate_at(tower[static_cast<std::size_t>(m)], q);
  const std::vector<Rational> low = evaluate_at(tower[static_cast<std::size_t>(m - 2)], q);
  const auto P = projector(q);
  // Z_c = P e_c is column c of P, which is symmetric.
  const std::size_t tuples = ipow(dim, m);
  const auto si = static_cast<std::size_t>(i - 1);
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    const std::vector<int> c = digits(flat, dim, m);
    std::vector<std::vector<Rational>> z;
    for (int s = 0; s < m; ++s) z.push_back(P[static_cast<std::size_t>(c[static_cast<std::size_t>(s)])]);
    std::vector<std::vector<Rational>> swapped = z;
    std::swap(swapped[si], swapped[si + 1]);
    const Rational lhs = apply(top, dim, z) - apply(top, dim, swapped);

    Rational rhs = 0;
    for (std::size_t j = si + 2; j < z.size(); ++j) {
      // −R(Z_i, Z_{i+1}) Z_j = g(Z_i, Z_j) Z_{i+1} − g(Z_{i+1}, Z_j) Z_i
      const Rational gij = dot(z[si], z[j]);
      const Rational gi1j = dot(z[si + 1], z[j]);
      std::vector<Rational> w(dim);
      for (std::size_t a = 0; a < dim; ++a) w[a] = gij * z[si + 1][a] - gi1j * z[si][a];
      std::vector<std::vector<Rational>> args;
      for (std::size_t s = 0; s < z.size(); ++s) {
        if (s == si || s == si + 1) continue;
        args.push_back(s == j ? w : z[s]);
      }
      rhs += apply(low, dim, args);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool commutation_check(int n, int p, int m, int i, std::size_t eigen_index, const SpherePoint& q) {
  const HarmonicEigenfunction f = make_eigenfunction(n, p, eigen_index);
  return commutation_check(derivative_tower(f, m), m, i, q);
}

}  // namespace sfdc::oracle
