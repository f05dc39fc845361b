#include "sfdc/linking.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "sfdc/reduction.hpp"

namespace sfdc {

LinkSpec::LinkSpec(std::vector<LinkPair> pairs) : pairs_(std::move(pairs)) {
  std::set<std::size_t> seen;
  for (LinkPair& p : pairs_) {
    if (p.first == 0 || p.second == 0) throw IndexError("link indices are 1-based");
    if (p.first == p.second) {
      throw IndexError("link pair " + std::to_string(p.first) + ":" + std::to_string(p.second) +
                       " joins an index to itself");
    }
    if (p.first > p.second) std::swap(p.first, p.second);
    for (std::size_t idx : {p.first, p.second}) {
      if (!seen.insert(idx).second) {
        throw OverlapError("index " + std::to_string(idx) + " appears in more than one link pair");
      }
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::size_t LinkSpec::max_index() const {
  std::size_t m = 0;
  for (const LinkPair& p : pairs_) m = std::max(m, p.second);
  return m;
}

std::string LinkSpec::to_string() const {
  std::string out;
  for (const LinkPair& p : pairs_) {
    if (!out.empty()) out += ",";
    out += std::to_string(p.first) + ":" + std::to_string(p.second);
  }
  return out;
}

LinkSpec parse_link_spec(std::string_view text) {
  std::vector<LinkPair> pairs;
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("malformed link index '" + std::string(s) + "'");
    }
    return v;
  };
  if (text.empty()) return LinkSpec();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("link pair '" + std::string(item) + "' lacks ':'");
    pairs.push_back({number(item.substr(0, colon)), number(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LinkSpec(std::move(pairs));
}

namespace {

// Letters tagged with their original 1-based positions.
struct Slot {
  std::size_t position;
  Letter letter;
};

std::vector<Slot>::iterator find_position(std::vector<Slot>& slots, std::size_t position) {
  return std::find_if(slots.begin(), slots.end(), [&](const Slot& s) { return s.position == position; });
}

LinkedWord link_slots(std::vector<Slot> slots, const std::vector<LinkPair>& pairs) {
  unsigned circles = 0;
  for (const LinkPair& p : pairs) {
    auto it_i = find_position(slots, p.first);
    auto it_j = find_position(slots, p.second);
    const Letter li = it_i->letter;
    const Letter lj = it_j->letter;
    // Erase the later iterator first so the earlier one stays valid.
    if (it_i > it_j) std::swap(it_i, it_j);
    slots.erase(it_j);
    slots.erase(it_i);
    if (li == lj) {
      ++circles;
      continue;
    }
    for (Slot& s : slots) {
      if (s.letter == lj) s.letter = li;
    }
  }
  std::vector<Letter> letters;
  letters.reserve(slots.size());
  for (const Slot& s : slots) letters.push_back(s.letter);
  return {circles, canonicalize(Word(std::move(letters)))};
}

std::vector<Slot> slots_of(const Word& w) {
  std::vector<Slot> slots;
  slots.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) slots.push_back({i + 1, w[i]});
  return slots;
}

}  // namespace

LinkedWord link(const Word& w, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > w.size()) {
    throw IndexError("link positions " + std::to_string(i) + ", " + std::to_string(j) +
                     " invalid for a word of length " + std::to_string(w.size()));
  }
  return link_slots(slots_of(w), {{i, j}});
}

LinkedWord multi_link(const Word& w, const LinkSpec& spec) {
  if (spec.max_index() > w.size()) {
    throw IndexError("link position " + std::to_string(spec.max_index()) + " exceeds word length " +
                     std::to_string(w.size()));
  }
  return link_slots(slots_of(w), spec.pairs());
}

LinkedWord multi_link_in_order(const Word& w, const std::vector<LinkPair>& pairs) {
  const LinkSpec spec(pairs);
  if (spec.max_index() > w.size()) {
    throw IndexError("link position " + std::to_string(spec.max_index()) + " exceeds word length " +
                     std::to_string(w.size()));
  }
  return link_slots(slots_of(w), pairs);
}

Word tau(int k) {
  if (k < 0) throw IndexError("negative half-length");
  std::vector<Letter> letters;
  for (int i = 0; i < k; ++i) letters.push_back(static_cast<Letter>(i));
  for (int i = k; i-- > 0;) letters.push_back(static_cast<Letter>(i));
  return Word(std::move(letters));
}

Word tau_sigma(const std::vector<std::size_t>& sigma) {
  const std::size_t k = sigma.size();
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < k; ++i) letters.push_back(static_cast<Letter>(i));
  for (std::size_t v : sigma) {
    if (v < 1 || v > k) throw IndexError("permutation value out of range");
    letters.push_back(static_cast<Letter>(v - 1));
  }
  return Word(std::move(letters));
}

Word link_right_half(const Word& start, const LinkSpec& letter_spec) {
  const std::size_t k = start.half_length();
  if (letter_spec.max_index() > k) {
    throw IndexError("letter index " + std::to_string(letter_spec.max_index()) + " exceeds k = " +
                     std::to_string(k));
  }
  std::vector<LinkPair> positions;
  for (const LinkPair& p : letter_spec.pairs()) {
    std::size_t a = start.partner(p.first - 1) + 1;
    std::size_t b = start.partner(p.second - 1) + 1;
    if (a <= k || b <= k) throw IndexError("start word does not list distinct letters in its first half");
    positions.push_back({a, b});
  }
  LinkedWord out = multi_link(start, LinkSpec(std::move(positions)));
  if (out.circles != 0) {
    throw CircleUnexpectedError("right-half linking of " + start.to_string() + " by " +
                                letter_spec.to_string() + " closed a circle");
  }
  return out.word;
}

Word tau_linked(int k, const LinkSpec& letter_spec) { return link_right_half(tau(k), letter_spec); }

DiagramPoly linked_value(const LinkedWord& lw) {
  RatFunN scale(NPoly::monomial(Rational(1), lw.circles));
  return reduce(lw.word) * scale;
}

}  // namespace sfdc
