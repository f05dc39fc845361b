#include "sfdc/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sfdc/errors.hpp"

namespace sfdc {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::map<Letter, int> counts;
  for (Letter l : letters_) ++counts[l];
  for (const auto& [letter, count] : counts) {
    if (count != 2) {
      throw LetterCountError("letter " + std::to_string(letter) + " occurs " +
                             std::to_string(count) + " times, expected 2");
    }
  }
}

Word Word::from_pairing(std::span<const PositionPair> pairs) {
  std::vector<Letter> letters(2 * pairs.size(), 0);
  std::vector<bool> seen(letters.size(), false);
  Letter next = 0;
  for (const PositionPair& p : pairs) {
    if (p.first == 0 || p.second == 0 || p.first > letters.size() ||
        p.second > letters.size() || p.first == p.second ||
        seen[p.first - 1] || seen[p.second - 1]) {
      throw IndexError("pairing is not a perfect matching of 1.." +
                       std::to_string(letters.size()));
    }
    seen[p.first - 1] = seen[p.second - 1] = true;
    letters[p.first - 1] = letters[p.second - 1] = next++;
  }
  return canonicalize(Word(std::move(letters)));
}

std::size_t Word::partner(std::size_t index) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != index && letters_[i] == letters_[index]) return i;
  }
  throw IndexError("position has no partner");
}

std::vector<PositionPair> Word::pairing() const {
  std::vector<PositionPair> pairs;
  pairs.reserve(half_length());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    std::size_t j = partner(i);
    if (i < j) pairs.push_back({i + 1, j + 1});
  }
  return pairs;
}

bool Word::is_canonical() const {
  Letter next = 0;
  for (Letter l : letters_) {
    if (l > next) return false;
    if (l == next) ++next;
  }
  return true;
}

std::string Word::to_string() const {
  bool small = std::all_of(letters_.begin(), letters_.end(),
                           [](Letter l) { return l < 26; });
  std::string out;
  if (small) {
    for (Letter l : letters_) out.push_back(static_cast<char>('a' + l));
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < 'a' || c > 'z') {
        throw ParseError(std::string("unexpected character '") + c +
                         "' in word; use a-z or comma-separated tokens");
      }
      letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return Word(std::move(letters));
  }
  std::map<std::string, Letter, std::less<>> ids;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    if (token.empty()) throw EmptyTokenError("empty token in word");
    auto it = ids.find(token);
    if (it == ids.end()) {
      it = ids.emplace(std::string(token), static_cast<Letter>(ids.size())).first;
    }
    letters.push_back(it->second);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(letters));
}

Word canonicalize(const Word& w) {
  std::map<Letter, Letter> rename;
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter l : w.letters()) {
    auto it = rename.find(l);
    if (it == rename.end()) {
      it = rename.emplace(l, static_cast<Letter>(rename.size())).first;
    }
    letters.push_back(it->second);
  }
  return Word(std::move(letters));
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return canonicalize(Word(std::move(letters)));
}

Word concat(const Word& u, const Word& v) {
  Letter shift = 0;
  for (Letter l : u.letters()) shift = std::max<Letter>(shift, l + 1);
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  for (Letter l : v.letters()) letters.push_back(static_cast<Letter>(l + shift));
  return canonicalize(Word(std::move(letters)));
}

std::uint64_t double_factorial_odd(int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r *= static_cast<std::uint64_t>(2 * i - 1);
  return r;
}

namespace {

void extend(std::vector<Letter>& letters, std::vector<bool>& used, Letter next,
            const std::function<void(const Word&)>& visit) {
  auto open = std::find(used.begin(), used.end(), false);
  if (open == used.end()) {
    visit(Word(letters));
    return;
  }
  std::size_t first = static_cast<std::size_t>(open - used.begin());
  used[first] = true;
  letters[first] = next;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    letters[j] = next;
    extend(letters, used, static_cast<Letter>(next + 1), visit);
    used[j] = false;
  }
  used[first] = false;
}

void check_cap(int k, int cap) {
  if (k < 0) throw IndexError("half-length must be non-negative");
  if (k > cap) {
    throw SizeLimitError("half-length " + std::to_string(k) +
                         " exceeds the configured cap " + std::to_string(cap));
  }
}

}  // namespace

void for_each_word(int k, const std::function<void(const Word&)>& visit,
                   int cap) {
  check_cap(k, cap);
  std::vector<Letter> letters(2 * static_cast<std::size_t>(k), 0);
  std::vector<bool> used(letters.size(), false);
  extend(letters, used, 0, visit);
}

std::vector<Word> enumerate_words(int k, int cap) {
  check_cap(k, cap);
  std::vector<Word> out;
  out.reserve(double_factorial_odd(k));
  for_each_word(k, [&](const Word& w) { out.push_back(w); }, cap);
  return out;
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii" || name == "ascii-arc") return RenderFormat::ascii_arc;
  if (name == "dot") return RenderFormat::dot;
  throw UnsupportedFormatError("unsupported diagram format '" +
                               std::string(name) + "'");
}

namespace {

// Arcs are stacked in layers; an arc goes to the lowest layer whose arcs do
// not overlap its column span. Inner (shorter) arcs are placed first.
std::string render_ascii(const Word& w) {
  if (w.empty()) return "(empty)\n";
  std::vector<PositionPair> arcs = w.pairing();
  std::stable_sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return a.second - a.first < b.second - b.first;
  });
  std::vector<std::vector<PositionPair>> layers;
  for (const PositionPair& arc : arcs) {
    std::size_t layer = 0;
    for (; layer < layers.size(); ++layer) {
      bool clash = std::any_of(
          layers[layer].begin(), layers[layer].end(), [&](const auto& other) {
            return !(other.second < arc.first || arc.second < other.first);
          });
      if (!clash) break;
    }
    if (layer == layers.size()) layers.emplace_back();
    layers[layer].push_back(arc);
  }
  const std::size_t width = 2 * w.size() - 1;
  std::vector<std::string> rows(layers.size(), std::string(width, ' '));
  // rows[0] is the top line, i.e. the highest layer.
  for (std::size_t layer = 0; layer < layers.size(); ++layer) {
    std::size_t row = layers.size() - 1 - layer;
    for (const PositionPair& arc : layers[layer]) {
      std::size_t a = 2 * (arc.first - 1);
      std::size_t b = 2 * (arc.second - 1);
      for (std::size_t c = a + 1; c < b; ++c) {
        if (rows[row][c] != '|') rows[row][c] = '-';
      }
      rows[row][a] = '+';
      rows[row][b] = '+';
      for (std::size_t below = row + 1; below < rows.size(); ++below) {
        rows[below][a] = '|';
        rows[below][b] = '|';
      }
    }
  }
  std::ostringstream out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out << r << '\n';
  }
  std::string labels = w.to_string();
  bool contiguous = labels.find(',') == std::string::npos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    if (contiguous) {
      out << labels[i];
    } else {
      out << '*';
    }
  }
  out << '\n';
  return out.str();
}

std::string render_dot(const Word& w) {
  std::ostringstream out;
  out << "graph word {\n";
  out << "  node [shape=circle];\n";
  std::string labels = w.to_string();
  bool contiguous = labels.find(',') == std::string::npos;
  out << "  { rank=same;";
  for (std::size_t i = 1; i <= w.size(); ++i) out << ' ' << i << ';';
  out << " }\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out << "  " << i + 1 << " [label=\"";
    if (contiguous) {
      out << labels[i];
    } else {
      out << w[i];
    }
    out << "\"];\n";
  }
  for (const PositionPair& p : w.pairing()) {
    out << "  " << p.first << " -- " << p.second << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

DiagramRender render(const Word& w, RenderFormat format) {
  switch (format) {
    case RenderFormat::ascii_arc:
      return {format, render_ascii(w)};
    case RenderFormat::dot:
      return {format, render_dot(w)};
  }
  throw UnsupportedFormatError("unsupported diagram format");
}

}  // namespace sfdc
