#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sfdc/algebra/field_elem.hpp"

namespace sfdc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

class SingularSystemError : public Error {
 public:
  SingularSystemError(std::string what, std::size_t column)
      : Error(std::move(what)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Carries a nonzero kernel vector of the coefficient matrix as certificate.
template <class C>
class SingularSystem : public SingularSystemError {
 public:
  SingularSystem(std::size_t column, std::vector<FieldElem<C>> kernel)
      : SingularSystemError("singular system: column " + std::to_string(column) +
                                " has no admissible pivot",
                            column),
        kernel_(std::move(kernel)) {}
  const std::vector<FieldElem<C>>& kernel() const { return kernel_; }

 private:
  std::vector<FieldElem<C>> kernel_;
};

enum class Elimination { fraction_free, naive };

namespace detail {

template <class C>
std::pair<int, std::size_t> pivot_size(const BiPoly<C>& p) {
  return {p.total_degree(), p.terms().size()};
}

template <class C>
std::tuple<int, std::size_t> pivot_size(const FieldElem<C>& e) {
  return {e.num().total_degree() + e.den().total_degree(),
          e.num().terms().size() + e.den().terms().size()};
}

// Nonzero row in [from, rows) with the smallest pivot size; ties go to the
// first such row. Returns rows when the column is zero below `from`.
template <class T>
std::size_t choose_pivot(const Matrix<T>& m, std::size_t col, std::size_t from) {
  std::size_t best = m.size();
  for (std::size_t r = from; r < m.size(); ++r) {
    if (m[r][col].is_zero()) continue;
    if (best == m.size() || pivot_size(m[r][col]) < pivot_size(m[best][col])) best = r;
  }
  return best;
}

// Upper-triangular `u` (columns < col carry pivots). Solves for a kernel
// vector with component `col` equal to one.
template <class C, class T, class ToElem>
std::vector<FieldElem<C>> kernel_certificate(const Matrix<T>& u, std::size_t col,
                                             std::size_t n, ToElem to_elem) {
  std::vector<FieldElem<C>> v(n);
  v[col] = FieldElem<C>(BiPoly<C>::one());
  for (std::size_t ii = col; ii-- > 0;) {
    FieldElem<C> acc = -to_elem(u[ii][col]);
    for (std::size_t j = ii + 1; j < col; ++j) acc -= to_elem(u[ii][j]) * v[j];
    v[ii] = acc / to_elem(u[ii][ii]);
  }
  return v;
}

template <class C>
BiPoly<C> lcm(const BiPoly<C>& a, const BiPoly<C>& b) {
  if (a.is_one()) return b;
  if (b.is_one() || a == b) return a;
  return divide_or_throw(a * b, homogeneous_gcd(a, b));
}

}  // namespace detail

// Exact solution of a·x = rhs over the fraction field of C[θ, K].
//
// fraction_free: rows are cleared of denominators and reduced by one-step
// Bareiss elimination in C[θ, K] with exact divisions; only the final back
// substitution works with fractions. naive: Gaussian elimination directly on
// fractions. Both select pivots the same way and return identical results.
// Throws SingularSystem<C> with a kernel vector when a is singular.
template <class C>
std::vector<FieldElem<C>> solve_linear(const Matrix<FieldElem<C>>& a,
                                       const std::vector<FieldElem<C>>& rhs,
                                       Elimination method = Elimination::fraction_free) {
  using Elem = FieldElem<C>;
  using Poly = BiPoly<C>;
  const std::size_t n = a.size();
  if (rhs.size() != n) throw IndexError("right-hand side length does not match the matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw IndexError("coefficient matrix must be square");
  }
  std::vector<Elem> x(n);

  if (method == Elimination::naive) {
    Matrix<Elem> m = a;
    for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = detail::choose_pivot(m, k, k);
      if (p == n) {
        throw SingularSystem<C>(
            k, detail::kernel_certificate<C>(m, k, n, [](const Elem& e) { return e; }));
      }
      std::swap(m[k], m[p]);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        Elem factor = m[i][k] / m[k][k];
        for (std::size_t j = k + 1; j <= n; ++j) m[i][j] -= factor * m[k][j];
        m[i][k] = Elem();
      }
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Elem acc = m[ii][n];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * x[j];
      x[ii] = acc / m[ii][ii];
    }
    return x;
  }

  Matrix<Poly> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    Poly common = Poly::one();
    for (const Elem& e : a[r]) common = detail::lcm(common, e.den());
    common = detail::lcm(common, rhs[r].den());
    auto clear = [&](const Elem& e) {
      return e.num() * divide_or_throw(common, e.den());
    };
    for (const Elem& e : a[r]) m[r].push_back(clear(e));
    m[r].push_back(clear(rhs[r]));
  }
  auto as_elem = [](const Poly& p) { return Elem(p); };
  Poly previous = Poly::one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = detail::choose_pivot(m, k, k);
    if (p == n) throw SingularSystem<C>(k, detail::kernel_certificate<C>(m, k, n, as_elem));
    std::swap(m[k], m[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = previous.is_one() ? std::move(t) : divide_or_throw(t, previous);
      }
      m[i][k] = Poly();
    }
    previous = m[k][k];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Elem acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Elem(m[ii][j]) * x[j];
    x[ii] = acc / Elem(m[ii][ii]);
  }
  return x;
}

template <class C>
struct GeneralSolution {
  std::vector<FieldElem<C>> particular;  // free unknowns set to zero
  std::vector<std::vector<FieldElem<C>>> kernel;  // basis of the null space
};

// Every solution of a possibly singular square system, by reduced row echelon
// form over the fraction field. Throws SingularSystemError when inconsistent.
template <class C>
GeneralSolution<C> solve_general(const Matrix<FieldElem<C>>& a, const std::vector<FieldElem<C>>& rhs) {
  using Elem = FieldElem<C>;
  const std::size_t n = a.size();
  if (rhs.size() != n) throw IndexError("right-hand side length does not match the matrix");
  Matrix<Elem> m = a;
  for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = detail::choose_pivot(m, col, row);
    if (p == n) continue;
    std::swap(m[row], m[p]);
    const Elem inv = Elem(BiPoly<C>::one()) / m[row][col];
    for (std::size_t j = col; j <= n; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Elem factor = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (!m[i][n].is_zero()) throw SingularSystemError("inconsistent singular system", i);
  }
  GeneralSolution<C> out;
  out.particular.assign(n, Elem());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    out.particular[pivot_cols[r]] = m[r][n];
    is_pivot[pivot_cols[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(n);
    v[f] = Elem(BiPoly<C>::one());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][f];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// a·x - rhs, entry by entry.
template <class C>
std::vector<FieldElem<C>> residuals(const Matrix<FieldElem<C>>& a,
                                    const std::vector<FieldElem<C>>& x,
                                    const std::vector<FieldElem<C>>& rhs) {
  std::vector<FieldElem<C>> out;
  out.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    FieldElem<C> acc = -rhs[r];
    for (std::size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace sfdc
