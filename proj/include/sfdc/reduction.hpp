#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sfdc/algebra/bipoly.hpp"
#include "sfdc/word.hpp"

namespace sfdc {

// A finite sum Σ coeff · |word⟩ over canonical words, like terms merged.
class WeightedWordSum {
 public:
  void add(const DiagramPoly& coeff, const Word& word);

  // Terms ordered by canonical word.
  const std::map<Word, DiagramPoly>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::map<Word, DiagramPoly> terms_;
};

enum class Schedule {
  leftmost,   // fix the leftmost unpaired block, bubbling its partner leftward
  rightmost,  // fix the rightmost unpaired block, bubbling its partner rightward
};

struct ReduceOptions {
  Schedule schedule = Schedule::leftmost;
  // Drop commutator terms whose letter has both occurrences to the right of
  // the swapped pair; they cancel in pairs.
  bool skip_cancelling_pairs = true;
  bool memoize = true;
};

// |w⟩ − |w with positions i, i+1 swapped⟩ (i is 1-based) as a sum of words of
// length 2k − 2. Empty when i = 2k − 1 or when both positions carry the same
// letter. Throws IndexError unless 1 ≤ i ≤ 2k − 1.
WeightedWordSum transpose_step(const Word& w, std::size_t i, bool skip_cancelling_pairs = false);

// The polynomial |w⟩ ∈ Q(n)[θ, K]. For half-length k it is homogeneous of
// degree k with θ^k coefficient 1. Memoized per option set on canonical words;
// safe to call concurrently.
DiagramPoly reduce(const Word& w, const ReduceOptions& options = {});

DiagramPoly evaluate(const WeightedWordSum& sum, const ReduceOptions& options = {});

// Top component of p under the grading where θ, K and n each weigh one: for
// p homogeneous of degree k in (θ, K) with coefficients polynomial in n of
// n-degree at most the K-degree, keeps c_b n^b θ^a K^b from each term where
// c_b is the n^b coefficient. Throws GradeError on any other shape.
DiagramPoly leading_part(const DiagramPoly& p, int k);

// Snapshot and bulk load of the default-options memo, for persistence.
std::vector<std::pair<Word, DiagramPoly>> export_memo();
void import_memo(const std::vector<std::pair<Word, DiagramPoly>>& entries);
void clear_memo();
std::size_t memo_size(const ReduceOptions& options = {});

}  // namespace sfdc
