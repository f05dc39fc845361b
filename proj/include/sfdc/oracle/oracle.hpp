#pragma once

#include <cstdint>
#include <vector>

#include "sfdc/oracle/sphere_poly.hpp"
#include "sfdc/word.hpp"

// Exact differential geometry on the unit sphere S^n ⊂ R^{n+1} (K = 1), used
// as an independent check of the diagram calculus.
namespace sfdc::oracle {

// Restriction of a harmonic homogeneous polynomial of degree p, an
// eigenfunction of the sphere Laplacian with Δf = −p(p+n−1) f.
struct HarmonicEigenfunction {
  int n = 0;
  int p = 0;
  SpherePoly poly;  // homogeneous, not reduced modulo the sphere

  Rational lambda() const { return Rational(p * (p + n - 1)); }
};

// Dimension of the degree-p harmonic polynomials in n + 1 variables.
std::size_t eigenspace_dimension(int n, int p);

// index-th element of a fixed basis: harmonic projections of the monomials
// of degree p with x_{n+1}-exponent at most 1, in descending lexicographic
// order of exponent vectors. Throws IndexError beyond the eigenspace dimension.
HarmonicEigenfunction make_eigenfunction(int n, int p, std::size_t index);

// Covariant m-tensor on the sphere in ambient components: component
// (a_1..a_m) at flat index Σ a_s·N^{m−s}, reduced modulo the sphere ideal.
class AmbientTensorField {
 public:
  AmbientTensorField(int ambient_dim, int rank);

  static AmbientTensorField scalar(const SpherePoly& f);

  int ambient_dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return components_.size(); }

  const SpherePoly& operator[](std::size_t flat) const { return components_[flat]; }
  SpherePoly& operator[](std::size_t flat) { return components_[flat]; }
  const SpherePoly& at(std::span<const int> index) const;

  std::size_t flat_index(std::span<const int> index) const;
  // Stride of slot s in the flat index.
  std::size_t stride(int slot) const;

 private:
  int dim_;
  int rank_;
  std::vector<SpherePoly> components_;
};

// Levi-Civita derivative with the new slot first: the ambient partial
// derivative of each component's polynomial representative, followed by the
// projection P = δ − x xᵀ of every slot, reduced modulo the sphere ideal.
AmbientTensorField covariant_derivative(const AmbientTensorField& t);

// ∇^m f for the eigenfunction, with every intermediate level kept:
// result[j] = ∇^j f for j = 0..m.
std::vector<AmbientTensorField> derivative_tower(const HarmonicEigenfunction& f, int m);

// Every slot contracted with x vanishes modulo the ideal.
bool is_tangential(const AmbientTensorField& t);

// Exact rational point with Σ x_i² = 1.
using SpherePoint = std::vector<Rational>;

// Inverse stereographic image of t ∈ Q^n: (2t, |t|² − 1)/(|t|² + 1).
SpherePoint stereographic_point(const std::vector<Rational>& t);

// Deterministic points of S^n, skipping zeros of avoid (if given).
std::vector<SpherePoint> sphere_points(int n, std::size_t count, const SpherePoly* avoid = nullptr);

// Components of t at q.
std::vector<Rational> evaluate_at(const AmbientTensorField& t, const SpherePoint& q);

// Contracts the rank-2k tensor's slots pairwise along w's pairing with the
// inverse metric P^{ab} = δ_ab − q_a q_b and divides by f(q). Throws
// BasePointError when f(q) = 0 and IndexError on a rank mismatch.
Rational contract_word(const AmbientTensorField& t, const Word& w, const SpherePoint& q,
                       const SpherePoly& f);

// Contraction of ∇^{2k+n} f with θ^{⊗k} ⊗ Λ, slots permuted by a
// permutation drawn from seed. Λ's components are ε_{b a_1..a_n} x_b.
Rational contract_volume(int n, int p, int k, std::uint64_t seed, std::size_t eigen_index = 0);

// Same with an explicit tower and permutation (perm[s] is the tensor slot
// receiving the s-th factor slot).
Rational contract_volume(const AmbientTensorField& t, int n, int k, const std::vector<int>& perm,
                         const SpherePoint& q);

// Checks at q, for all frame tuples Z_c = P e_c, the curvature commutation of
// slots i, i+1 (1-based) of ∇^m f:
//   (∇^m f)(…Z_i, Z_{i+1}…) − (∇^m f)(…Z_{i+1}, Z_i…)
//     = Σ_{j>i+1} (∇^{m−2} f)(…, −R(Z_i, Z_{i+1}) Z_j, …)
// with R(X,Y)Z = g(Y,Z)X − g(X,Z)Y. For i = m − 1 this is the symmetry of
// the last two slots.
bool commutation_check(const std::vector<AmbientTensorField>& tower, int m, int i, const SpherePoint& q);
bool commutation_check(int n, int p, int m, int i, std::size_t eigen_index, const SpherePoint& q);

}  // namespace sfdc::oracle
