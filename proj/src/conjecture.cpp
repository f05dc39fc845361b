#include "sfdc/conjecture.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sfdc/algebra/format.hpp"
#include "sfdc/reduction.hpp"

namespace sfdc {

namespace {

void check_k(int k, int cap) {
  if (k < 1) throw IndexError("k must be at least 1");
  if (k > cap) {
    throw SizeLimitError("k = " + std::to_string(k) + " exceeds the configured cap " + std::to_string(cap));
  }
}

void matchings_of_size(int k, std::size_t pairs_left, int from, std::vector<bool>& used,
                       std::vector<LinkPair>& current, std::vector<LinkSpec>& out) {
  if (pairs_left == 0) {
    out.emplace_back(current);
    return;
  }
  for (int i = from; i <= k; ++i) {
    if (used[i]) continue;
    used[i] = true;
    for (int j = i + 1; j <= k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
      matchings_of_size(k, pairs_left - 1, i + 1, used, current, out);
      current.pop_back();
      used[j] = false;
    }
    used[i] = false;
  }
}

std::uint64_t binomial(int n, int r) {
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

struct Assembled {
  std::vector<LinkSpec> index;
  Matrix<DiagramPoly> matrix;
  std::vector<DiagramPoly> rhs;
};

Assembled assemble(int k, const std::optional<Word>& start_opt, int cap) {
  check_k(k, cap);
  const Word start = start_opt.value_or(tau(k));
  if (static_cast<int>(start.half_length()) != k) throw IndexError("start word has the wrong half-length");
  Assembled out;
  out.index = system_index(k);
  std::vector<Word> columns;
  columns.reserve(out.index.size());
  for (const LinkSpec& spec : out.index) columns.push_back(link_right_half(start, spec));
  for (const LinkSpec& row : out.index) {
    std::vector<DiagramPoly> entries;
    entries.reserve(columns.size());
    for (const Word& col : columns) entries.push_back(linked_value(multi_link(col, row)));
    out.matrix.push_back(std::move(entries));
    out.rhs.push_back(-linked_value(multi_link(start, row)));
  }
  return out;
}

template <class C>
LinearSystem<C> convert(int k, Assembled a, const std::function<BiPoly<C>(const DiagramPoly&)>& fn) {
  LinearSystem<C> out;
  out.k = k;
  out.index = std::move(a.index);
  for (const auto& row : a.matrix) {
    std::vector<FieldElem<C>> r;
    r.reserve(row.size());
    for (const DiagramPoly& e : row) r.emplace_back(fn(e));
    out.matrix.push_back(std::move(r));
  }
  for (const DiagramPoly& e : a.rhs) out.rhs.emplace_back(fn(e));
  return out;
}

template <class C>
std::vector<FieldElem<C>> solve_checked(const LinearSystem<C>& system, Elimination method) {
  std::vector<FieldElem<C>> x = solve_linear(system.matrix, system.rhs, method);
  for (const auto& r : residuals(system.matrix, x, system.rhs)) {
    if (!r.is_zero()) throw Error("nonzero residual after exact solve");
  }
  return x;
}

// Degree test for one solved coefficient attached to an l-pair spec: returns
// false on failure and appends a note for strictly smaller degrees.
template <class C>
bool degree_ok(const FieldElem<C>& x, std::size_t l, const std::string& label,
               std::vector<std::string>& notes) {
  if (!x.is_polynomial()) {
    notes.push_back("x[" + label + "] has a denominator depending on θ or K");
    return false;
  }
  int d = x.num().theta_degree();
  if (d == static_cast<int>(l)) return true;
  if (d < static_cast<int>(l)) {
    notes.push_back("x[" + label + "] has θ-degree " + std::to_string(d) + " < " + std::to_string(l));
    return true;
  }
  notes.push_back("x[" + label + "] has θ-degree " + std::to_string(d) + " > " + std::to_string(l));
  return false;
}

std::string factored(const RatFunN& c, int k) {
  std::string out;
  if (!c.is_one()) {
    out = to_string(DiagramPoly(c));
    if (out.front() == '-') out = "(" + out + ")";
  }
  for (int p = 0; p < k; ++p) {
    DiagramPoly factor = DiagramPoly::theta();
    factor += DiagramPoly::monomial(RatFunN(NPoly({Rational(p * (p - 1)), Rational(p)})), 0, 1);
    std::string f = p == 0 ? "θ" : "(" + to_string(factor) + ")";
    out += out.empty() ? f : "*" + f;
  }
  return out;
}

nlohmann::json elem_json(const SymbolicElem& e) {
  return {{"text", to_string(e)}, {"num", to_json(e.num())}, {"den", to_json(e.den())}};
}

}  // namespace

std::vector<LinkSpec> system_index(int k) {
  std::vector<LinkSpec> out;
  for (int l = 1; 2 * l <= k; ++l) {
    std::vector<LinkSpec> level;
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    std::vector<LinkPair> current;
    matchings_of_size(k, static_cast<std::size_t>(l), 1, used, current, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t system_size(int k) {
  std::uint64_t total = 0;
  for (int l = 1; 2 * l <= k; ++l) total += binomial(k, 2 * l) * double_factorial_odd(l);
  return static_cast<std::size_t>(total);
}

SymbolicSystem build_system(int k, const std::optional<Word>& start, int cap) {
  return convert<RatFunN>(k, assemble(k, start, cap), [](const DiagramPoly& p) { return p; });
}

NumericSystem build_numeric_system(int k, long n, const std::optional<Word>& start, int cap) {
  return convert<Rational>(k, assemble(k, start, cap),
                           [n](const DiagramPoly& p) { return substitute_n(p, n); });
}

std::vector<SymbolicElem> solve_coefficients(const SymbolicSystem& system, Elimination method) {
  return solve_checked(system, method);
}

std::vector<NumericElem> solve_coefficients(const NumericSystem& system, Elimination method) {
  return solve_checked(system, method);
}

SymbolicElem target_polynomial(int k, const std::vector<SymbolicElem>& x, const std::optional<Word>& start) {
  const Word s = start.value_or(tau(k));
  const auto index = system_index(k);
  if (x.size() != index.size()) throw IndexError("coefficient vector does not match the system index");
  SymbolicElem out(reduce(s));
  for (std::size_t i = 0; i < index.size(); ++i) out += x[i] * SymbolicElem(reduce(link_right_half(s, index[i])));
  return out;
}

NumericElem target_polynomial(int k, long n, const std::vector<NumericElem>& x, const std::optional<Word>& start) {
  const Word s = start.value_or(tau(k));
  const auto index = system_index(k);
  if (x.size() != index.size()) throw IndexError("coefficient vector does not match the system index");
  NumericElem out(substitute_n(reduce(s), n));
  for (std::size_t i = 0; i < index.size(); ++i) {
    out += x[i] * NumericElem(substitute_n(reduce(link_right_half(s, index[i])), n));
  }
  return out;
}

DiagramPoly bare_product(int k) {
  DiagramPoly out = DiagramPoly::one();
  for (int p = 0; p < k; ++p) {
    // θ + K·p(n + p − 1) = θ + K·(p·n + p(p − 1))
    DiagramPoly factor = DiagramPoly::theta();
    factor += DiagramPoly::monomial(RatFunN(NPoly({Rational(p * (p - 1)), Rational(p)})), 0, 1);
    out *= factor;
  }
  return out;
}

RatFunN product_constant(int factor_count) {
  RatFunN out(1);
  const RatFunN n = RatFunN::n();
  for (int i = 0; i < factor_count; ++i) out *= (n + RatFunN(i - 1)) / (n + RatFunN(2 * i));
  return out;
}

RatFunN conjectured_constant(int k) { return product_constant(std::max(k - 1, 0)); }

ConjecturedProduct conjectured_product(int k) {
  RatFunN c = conjectured_constant(k);
  return {bare_product(k) * c, c};
}

ConjectureReport verify_conjectures(int k, VerifyMode mode, const std::vector<long>& n_samples, int cap) {
  check_k(k, cap);
  ConjectureReport rep;
  rep.k = k;
  rep.mode = mode;
  rep.index = system_index(k);
  rep.product = conjectured_product(k).product;
  rep.c_closed_form = conjectured_constant(k);
  rep.c_closed_form_r_is_k = product_constant(k);
  const DiagramPoly bare = bare_product(k);

  rep.diagonal_one_circle_per_pair = true;
  for (const LinkSpec& spec : rep.index) {
    LinkedWord lw = multi_link(tau_linked(k, spec), spec);
    rep.diagonal_circles.push_back(lw.circles);
    const int l = static_cast<int>(spec.size());
    if (lw.circles != spec.size() || lw.word != tau(k - 2 * l)) rep.diagonal_one_circle_per_pair = false;
  }
  rep.diagnostics.push_back(
      rep.diagonal_one_circle_per_pair
          ? "diagonal entries: linking an l-pair spec against itself closes exactly l circles, so the factor "
            "is n^l, not n^k"
          : "diagonal entries: circle count differs from the number of linked pairs");

  if (mode == VerifyMode::symbolic) {
    const SymbolicSystem system = build_system(k, std::nullopt, cap);
    try {
      rep.x = solve_coefficients(system);
    } catch (const SingularSystemError& e) {
      rep.diagnostics.push_back(std::string("solve failed: ") + e.what());
      return rep;
    }
    rep.conj1_pass = true;
    for (std::size_t i = 0; i < rep.index.size(); ++i) {
      rep.conj1_pass &= degree_ok(rep.x[i], rep.index[i].size(), rep.index[i].to_string(), rep.diagnostics);
    }
    SymbolicElem t = target_polynomial(k, rep.x);
    if (!t.is_polynomial()) {
      rep.diagnostics.push_back("target is not a polynomial in θ and K: " + to_string(t));
      return rep;
    }
    rep.target = t.num();
    auto q = exact_divide(*rep.target, bare);
    if (q && q->is_constant()) {
      rep.c_constant = q->coeff(0, 0);
      rep.conj2_pass = true;
      rep.c_pass = *rep.c_constant == rep.c_closed_form;
      if (!rep.c_pass) rep.diagnostics.push_back("extracted constant differs from the closed form");
    } else {
      rep.diagnostics.push_back("target is not a constant multiple of the product");
    }
    return rep;
  }

  if (n_samples.empty()) throw IndexError("numeric mode needs at least one n sample");
  rep.conj1_pass = rep.conj2_pass = rep.c_pass = true;
  for (long n : n_samples) {
    if (n < 1) throw IndexError("dimension samples must be positive");
    SampleVerdict v;
    v.n = n;
    try {
      const NumericSystem system = build_numeric_system(k, n, std::nullopt, cap);
      std::vector<NumericElem> x;
      try {
        x = solve_coefficients(system);
        v.conj1_pass = true;
        for (std::size_t i = 0; i < rep.index.size(); ++i) {
          v.conj1_pass &= degree_ok(x[i], rep.index[i].size(), rep.index[i].to_string(), v.notes);
        }
      } catch (const SingularSystemError&) {
        // Diagram tensors are linearly dependent for small n; the target is
        // still determined when every null vector annihilates it.
        GeneralSolution<Rational> general = solve_general(system.matrix, system.rhs);
        x = general.particular;
        v.coefficients_unique = false;
        bool determined = true;
        for (const auto& kernel : general.kernel) {
          NumericElem shift;
          for (std::size_t i = 0; i < rep.index.size(); ++i) {
            shift += kernel[i] * NumericElem(substitute_n(reduce(tau_linked(k, rep.index[i])), n));
          }
          determined &= shift.is_zero();
        }
        v.notes.push_back("system singular at this n (null space of dimension " +
                          std::to_string(general.kernel.size()) + "); coefficients not unique, degree check " +
                          "not applicable");
        if (!determined) {
          v.notes.push_back("target depends on the choice of solution");
          throw SingularSystemError("target not determined by the singular system", 0);
        }
        v.notes.push_back("target is the same for every solution");
        v.conj1_pass = true;
      }
      NumericElem t = target_polynomial(k, n, x);
      if (t.is_polynomial()) {
        auto q = exact_divide(t.num(), substitute_n(bare, n));
        if (q && q->is_constant()) {
          v.c_value = q->coeff(0, 0);
          v.conj2_pass = true;
          v.c_pass = *v.c_value == rep.c_closed_form.eval(Rational(n));
        } else {
          v.notes.push_back("target is not a constant multiple of the product");
        }
      } else {
        v.notes.push_back("target is not a polynomial in θ and K");
      }
    } catch (const SingularSystemError& e) {
      v.notes.push_back(std::string("solve failed: ") + e.what());
    } catch (const PoleError& e) {
      v.notes.push_back(std::string("closed form undefined: ") + e.what());
    }
    rep.conj1_pass &= v.conj1_pass;
    rep.conj2_pass &= v.conj2_pass;
    rep.c_pass &= v.c_pass;
    rep.samples.push_back(std::move(v));
  }
  return rep;
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["mode"] = r.mode == VerifyMode::symbolic ? "symbolic" : "numeric";
  j["index"] = nlohmann::json::array();
  for (const LinkSpec& s : r.index) j["index"].push_back(s.to_string());
  if (r.mode == VerifyMode::symbolic) {
    j["x"] = nlohmann::json::object();
    for (std::size_t i = 0; i < r.x.size(); ++i) j["x"][r.index[i].to_string()] = elem_json(r.x[i]);
    if (r.target) {
      j["target"] = {{"text", to_string(*r.target)}, {"poly", to_json(*r.target)}};
      if (r.c_constant) j["target"]["factored"] = factored(*r.c_constant, r.k);
    } else {
      j["target"] = nullptr;
    }
    if (r.c_constant) {
      j["c_constant"] = {{"text", to_string(*r.c_constant)}, {"value", to_json(*r.c_constant)}};
    } else {
      j["c_constant"] = nullptr;
    }
  } else {
    j["samples"] = nlohmann::json::array();
    for (const SampleVerdict& v : r.samples) {
      j["samples"].push_back({{"n", v.n},
                              {"conj1_pass", v.conj1_pass},
                              {"conj2_pass", v.conj2_pass},
                              {"c_pass", v.c_pass},
                              {"coefficients_unique", v.coefficients_unique},
                              {"c_value", v.c_value ? nlohmann::json(to_string(*v.c_value)) : nlohmann::json()},
                              {"notes", v.notes}});
    }
  }
  j["product"] = {{"text", to_string(r.product)}, {"factored", factored(r.c_closed_form, r.k)}};
  j["c_closed_form"] = to_string(r.c_closed_form);
  j["c_closed_form_r_equals_k"] = to_string(r.c_closed_form_r_is_k);
  j["diagonal_circles"] = r.diagonal_circles;
  j["diagonal_one_circle_per_pair"] = r.diagonal_one_circle_per_pair;
  j["conj1_pass"] = r.conj1_pass;
  j["conj2_pass"] = r.conj2_pass;
  j["c_pass"] = r.c_pass;
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string summary(const ConjectureReport& r) {
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  std::ostringstream os;
  os << "k = " << r.k << " (" << (r.mode == VerifyMode::symbolic ? "symbolic" : "numeric") << "), "
     << r.index.size() << " unknowns\n";
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    os << "  x[" << r.index[i].to_string() << "] = " << to_string(r.x[i]) << "\n";
  }
  if (r.target) os << "target   = " << to_string(*r.target) << "\n";
  if (r.c_constant) os << "factored = " << factored(*r.c_constant, r.k) << "\n";
  os << "product  = " << factored(r.c_closed_form, r.k) << "\n";
  for (const SampleVerdict& v : r.samples) {
    os << "  n = " << v.n << ": degree " << verdict(v.conj1_pass) << ", product " << verdict(v.conj2_pass)
       << ", C " << verdict(v.c_pass);
    if (v.c_value) os << " (C = " << to_string(*v.c_value) << ")";
    os << "\n";
    for (const std::string& note : v.notes) os << "    note: " << note << "\n";
  }
  os << "C closed form (r = k-1) = " << to_string(r.c_closed_form) << ", (r = k) = "
     << to_string(r.c_closed_form_r_is_k) << "\n";
  if (r.c_constant) os << "C extracted             = " << to_string(*r.c_constant) << "\n";
  for (const std::string& d : r.diagnostics) os << "note: " << d << "\n";
  os << "x polynomial in θ of degree l:   " << verdict(r.conj1_pass) << "\n";
  os << "target = C * product:            " << verdict(r.conj2_pass) << "\n";
  os << "C equals closed form (r = k-1):  " << verdict(r.c_pass) << "\n";
  return os.str();
}

}  // namespace sfdc
