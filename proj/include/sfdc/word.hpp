#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfdc {

using Letter = std::uint16_t;

// A pair of 1-based positions (first < second) carrying the same letter.
struct PositionPair {
  std::size_t first = 0;
  std::size_t second = 0;
  auto operator<=>(const PositionPair&) const = default;
};

// A word of length 2k in which every letter occurs exactly twice. Equivalent
// to a perfect matching of the positions 1..2k, i.e. a Brauer diagram with all
// vertices in one row. Element access through operator[] is 0-based; every
// API that talks about "positions" uses 1-based indices.
class Word {
 public:
  Word() = default;

  // Throws LetterCountError unless every letter occurs exactly twice.
  explicit Word(std::vector<Letter> letters);

  static Word from_pairing(std::span<const PositionPair> pairs);

  std::size_t size() const { return letters_.size(); }
  std::size_t half_length() const { return letters_.size() / 2; }
  bool empty() const { return letters_.empty(); }

  Letter operator[](std::size_t index) const { return letters_[index]; }
  std::span<const Letter> letters() const { return letters_; }

  // 0-based index of the other occurrence of the letter at `index`.
  std::size_t partner(std::size_t index) const;

  // Sorted list of 1-based position pairs.
  std::vector<PositionPair> pairing() const;

  bool is_canonical() const;

  // Contiguous a..z form when the alphabet allows it, else comma-separated
  // numeric ids.
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// "aabccb" (letters a..z map to ids 0..25, not renamed) or "x,y,y,x" (tokens
// numbered by first occurrence).
Word parse_word(std::string_view text);

Word canonicalize(const Word& w);
Word reverse(const Word& w);
Word concat(const Word& u, const Word& v);

inline constexpr int kDefaultWordCap = 8;

// (2k-1)!!, the number of perfect matchings of 2k points.
std::uint64_t double_factorial_odd(int k);

// Visits every canonical word of half-length k: the smallest open position is
// paired first, partners in ascending order.
void for_each_word(int k, const std::function<void(const Word&)>& visit,
                   int cap = kDefaultWordCap);

std::vector<Word> enumerate_words(int k, int cap = kDefaultWordCap);

enum class RenderFormat { ascii_arc, dot };

struct DiagramRender {
  RenderFormat format;
  std::string text;
};

RenderFormat parse_render_format(std::string_view name);

DiagramRender render(const Word& w, RenderFormat format);

}  // namespace sfdc
