#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sfdc/algebra/bipoly.hpp"
#include "sfdc/word.hpp"

namespace sfdc {

// An unordered link between two 1-based indices, stored with first < second.
struct LinkPair {
  std::size_t first = 0;
  std::size_t second = 0;
  auto operator<=>(const LinkPair&) const = default;
};

// Disjoint link pairs, kept sorted. Indices are positions when applied to a
// word and letter indices 1..k when applied to a τ-type word.
class LinkSpec {
 public:
  LinkSpec() = default;
  // Orders each pair and the list; throws IndexError on i == j or index 0,
  // OverlapError when two pairs share an index.
  explicit LinkSpec(std::vector<LinkPair> pairs);

  const std::vector<LinkPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::size_t max_index() const;

  // "1:2,3:4"
  std::string to_string() const;

  auto operator<=>(const LinkSpec&) const = default;

 private:
  std::vector<LinkPair> pairs_;
};

// Parses "i:j[,i:j...]". Throws ParseError.
LinkSpec parse_link_spec(std::string_view text);

// Semantic value n^circles · |word⟩.
struct LinkedWord {
  unsigned circles = 0;
  Word word;  // canonical
  bool operator==(const LinkedWord&) const = default;
};

// L(i; j): removes positions i and j. Equal letters close a circle; otherwise
// the partner of position j takes the letter of position i.
LinkedWord link(const Word& w, std::size_t i, std::size_t j);

// Applies every pair of spec to the original positions of w.
LinkedWord multi_link(const Word& w, const LinkSpec& spec);

// Same, applying the pairs in the given order; validated like a LinkSpec.
LinkedWord multi_link_in_order(const Word& w, const std::vector<LinkPair>& pairs);

// a_1 … a_k a_k … a_1.
Word tau(int k);

// a_1 … a_k a_{σ(1)} … a_{σ(k)} for a permutation given as 1-based values.
Word tau_sigma(const std::vector<std::size_t>& sigma);

// For a start word whose first half lists k distinct letters a_1 … a_k,
// links the right-half occurrences of a_i and a_j for every letter pair (i, j)
// in spec. Throws CircleUnexpectedError if a circle forms.
Word link_right_half(const Word& start, const LinkSpec& letter_spec);

// link_right_half(tau(k), spec).
Word tau_linked(int k, const LinkSpec& letter_spec);

DiagramPoly linked_value(const LinkedWord& lw);

}  // namespace sfdc
