#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sfdc/algebra/linear_solve.hpp"
#include "sfdc/linking.hpp"

namespace sfdc {

inline constexpr int kDefaultConjectureCap = 6;

// All letter link specs over {1..k} with 1..⌊k/2⌋ pairs, ordered by pair
// count and then lexicographically.
std::vector<LinkSpec> system_index(int k);

// Σ_{l ≥ 1} C(k, 2l)·(2l − 1)!!, by the closed formula.
std::size_t system_size(int k);

template <class C>
struct LinearSystem {
  int k = 0;
  std::vector<LinkSpec> index;
  Matrix<FieldElem<C>> matrix;
  std::vector<FieldElem<C>> rhs;
};

using SymbolicSystem = LinearSystem<RatFunN>;
using NumericSystem = LinearSystem<Rational>;

// Row J, column I: n^c·|multi_link(link_right_half(start, I), J)⟩ where J acts
// on left-half positions; rhs(J) = −n^c·|multi_link(start, J)⟩. The start
// word defaults to τ(k). Throws SizeLimitError when k exceeds cap.
SymbolicSystem build_system(int k, const std::optional<Word>& start = std::nullopt,
                            int cap = kDefaultConjectureCap);

// Same system with n fixed to an integer before elimination.
NumericSystem build_numeric_system(int k, long n, const std::optional<Word>& start = std::nullopt,
                                   int cap = kDefaultConjectureCap);

std::vector<SymbolicElem> solve_coefficients(const SymbolicSystem& system,
                                             Elimination method = Elimination::fraction_free);
std::vector<NumericElem> solve_coefficients(const NumericSystem& system,
                                            Elimination method = Elimination::fraction_free);

// |start⟩ + Σ_I x_I·|link_right_half(start, I)⟩.
SymbolicElem target_polynomial(int k, const std::vector<SymbolicElem>& x,
                               const std::optional<Word>& start = std::nullopt);
NumericElem target_polynomial(int k, long n, const std::vector<NumericElem>& x,
                              const std::optional<Word>& start = std::nullopt);

// ∏_{p=0}^{k−1} (θ + K·p(n + p − 1)).
DiagramPoly bare_product(int k);

// C_k = ∏_{i=0}^{r−1}(n − 1 + i) / ∏_{i=0}^{r−1}(n + 2i) for a factor count r.
RatFunN product_constant(int factor_count);

// The constant that reproduces the k = 2 and k = 3 closed forms: r = k − 1.
RatFunN conjectured_constant(int k);

struct ConjecturedProduct {
  DiagramPoly product;  // constant · bare_product(k)
  RatFunN constant;
};
ConjecturedProduct conjectured_product(int k);

enum class VerifyMode { symbolic, numeric };

struct SampleVerdict {
  long n = 0;
  bool conj1_pass = false;
  bool conj2_pass = false;
  bool c_pass = false;
  bool coefficients_unique = true;
  std::optional<Rational> c_value;
  std::vector<std::string> notes;
};

struct ConjectureReport {
  int k = 0;
  VerifyMode mode = VerifyMode::symbolic;
  std::vector<LinkSpec> index;
  // Symbolic mode only.
  std::vector<SymbolicElem> x;
  std::optional<DiagramPoly> target;
  std::optional<RatFunN> c_constant;
  // Numeric mode only.
  std::vector<SampleVerdict> samples;

  DiagramPoly product;          // conjectured_product(k).product
  RatFunN c_closed_form;        // conjectured_constant(k)
  RatFunN c_closed_form_r_is_k; // product_constant(k), the other reading
  std::vector<unsigned> diagonal_circles;  // per index entry
  bool diagonal_one_circle_per_pair = false;

  bool conj1_pass = false;
  bool conj2_pass = false;
  bool c_pass = false;
  std::vector<std::string> diagnostics;

  bool passed() const { return conj1_pass && conj2_pass && c_pass; }
};

inline const std::vector<long> kDefaultNumericSamples = {2, 3, 5, 7, 11};

ConjectureReport verify_conjectures(int k, VerifyMode mode,
                                    const std::vector<long>& n_samples = kDefaultNumericSamples,
                                    int cap = kDefaultConjectureCap);

nlohmann::json to_json(const ConjectureReport& report);

// Fixed-width human summary.
std::string summary(const ConjectureReport& report);

}  // namespace sfdc
