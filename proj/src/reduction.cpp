#include "sfdc/reduction.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sfdc {

void WeightedWordSum::add(const DiagramPoly& coeff, const Word& word) {
  if (coeff.is_zero()) return;
  Word key = word.is_canonical() ? word : canonicalize(word);
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

DiagramPoly k_times(RatFunN c) { return DiagramPoly::monomial(std::move(c), 0, 1); }

// Letters of w with 0-based positions p, p + 1 removed.
std::vector<Letter> without_block(std::vector<Letter> v, std::size_t p) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(p), v.begin() + static_cast<std::ptrdiff_t>(p + 2));
  return v;
}

struct Memo {
  std::shared_mutex mutex;
  std::unordered_map<Word, DiagramPoly, WordHash> values;
};

// One memo per (schedule, skip) combination so that the variants never see
// each other's results.
std::array<Memo, 4>& memos() {
  static std::array<Memo, 4> instance;
  return instance;
}

Memo& memo_for(const ReduceOptions& o) {
  std::size_t index = (o.schedule == Schedule::rightmost ? 2 : 0) + (o.skip_cancelling_pairs ? 1 : 0);
  return memos()[index];
}

DiagramPoly reduce_canonical(const Word& w, const ReduceOptions& o);

DiagramPoly compute(const Word& w, const ReduceOptions& o) {
  const std::size_t len = w.size();
  const auto k = static_cast<unsigned>(w.half_length());
  std::vector<Letter> cur(w.letters().begin(), w.letters().end());
  DiagramPoly result;

  if (o.schedule == Schedule::leftmost) {
    std::size_t p = 0;
    while (p < len && w[p] == w[p + 1]) p += 2;
    if (p == len) return DiagramPoly::monomial(RatFunN(1), k, 0);
    // Move the partner of position p down to p + 1.
    for (std::size_t t = w.partner(p); t > p + 1; --t) {
      result += evaluate(transpose_step(Word(cur), t, o.skip_cancelling_pairs), o);
      std::swap(cur[t - 1], cur[t]);
    }
  } else {
    std::size_t b = len;
    for (std::size_t p = 0; p < len; p += 2) {
      if (w[p] != w[p + 1]) b = p;
    }
    if (b == len) return DiagramPoly::monomial(RatFunN(1), k, 0);
    // Move the partner of position b + 1 up to b; it lies left of b.
    for (std::size_t t = w.partner(b + 1); t < b; ++t) {
      result += evaluate(transpose_step(Word(cur), t + 1, o.skip_cancelling_pairs), o);
      std::swap(cur[t], cur[t + 1]);
    }
  }
  result += reduce_canonical(canonicalize(Word(std::move(cur))), o);
  return result;
}

DiagramPoly reduce_canonical(const Word& w, const ReduceOptions& o) {
  if (w.empty()) return DiagramPoly::one();
  if (!o.memoize) return compute(w, o);
  Memo& memo = memo_for(o);
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(w);
    if (it != memo.values.end()) return it->second;
  }
  DiagramPoly value = compute(w, o);
  std::unique_lock lock(memo.mutex);
  return memo.values.try_emplace(w, std::move(value)).first->second;
}

}  // namespace

WeightedWordSum transpose_step(const Word& w, std::size_t i, bool skip_cancelling_pairs) {
  if (w.empty() || i < 1 || i >= w.size()) {
    throw IndexError("transposition position " + std::to_string(i) + " out of range for a word of length " +
                     std::to_string(w.size()));
  }
  WeightedWordSum out;
  const std::size_t p = i - 1;
  const Letter a = w[p];
  const Letter b = w[p + 1];
  if (a == b) return out;

  std::vector<int> tail_count;
  if (skip_cancelling_pairs) {
    for (std::size_t j = p + 2; j < w.size(); ++j) {
      if (w[j] >= tail_count.size()) tail_count.resize(w[j] + 1u, 0);
      ++tail_count[w[j]];
    }
  }

  const std::vector<Letter> base(w.letters().begin(), w.letters().end());
  const RatFunN n_minus_1 = RatFunN::n() - RatFunN(1);
  for (std::size_t j = p + 2; j < w.size(); ++j) {
    const Letter c = w[j];
    if (c == a) {
      std::vector<Letter> v = base;
      v[j] = b;
      out.add(k_times(n_minus_1), Word(without_block(std::move(v), p)));
    } else if (c == b) {
      std::vector<Letter> v = base;
      v[j] = a;
      out.add(k_times(-n_minus_1), Word(without_block(std::move(v), p)));
    } else {
      if (skip_cancelling_pairs && tail_count[c] == 2) continue;
      const std::size_t other = w.partner(j);
      std::vector<Letter> v = base;
      v[j] = a;
      v[other] = b;
      out.add(k_times(RatFunN(-1)), Word(without_block(std::move(v), p)));
      v = base;
      v[j] = b;
      v[other] = a;
      out.add(k_times(RatFunN(1)), Word(without_block(std::move(v), p)));
    }
  }
  return out;
}

DiagramPoly reduce(const Word& w, const ReduceOptions& options) {
  return reduce_canonical(w.is_canonical() ? w : canonicalize(w), options);
}

DiagramPoly evaluate(const WeightedWordSum& sum, const ReduceOptions& options) {
  DiagramPoly out;
  for (const auto& [word, coeff] : sum.terms()) out += coeff * reduce_canonical(word, options);
  return out;
}

DiagramPoly leading_part(const DiagramPoly& p, int k) {
  if (k < 0) throw GradeError("negative degree");
  DiagramPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e.theta + e.k) != k) {
      throw GradeError("term of (θ,K)-degree " + std::to_string(e.theta + e.k) + " in a degree-" +
                       std::to_string(k) + " polynomial");
    }
    if (!c.is_polynomial() || c.num().degree() > static_cast<int>(e.k)) {
      throw GradeError("coefficient " + to_string(c) + " exceeds the n-degree allowed by K^" +
                       std::to_string(e.k));
    }
    Rational top = c.num().coeff(e.k);
    if (sgn(top) == 0) continue;
    out.add_term(e, RatFunN(NPoly::monomial(top, e.k)));
  }
  return out;
}

std::vector<std::pair<Word, DiagramPoly>> export_memo() {
  Memo& memo = memo_for(ReduceOptions{});
  std::shared_lock lock(memo.mutex);
  std::vector<std::pair<Word, DiagramPoly>> out(memo.values.begin(), memo.values.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

void import_memo(const std::vector<std::pair<Word, DiagramPoly>>& entries) {
  Memo& memo = memo_for(ReduceOptions{});
  std::unique_lock lock(memo.mutex);
  for (const auto& [word, value] : entries) {
    // Entries that cannot be a reduction result are ignored.
    const auto k = static_cast<unsigned>(word.half_length());
    bool shaped = value.coeff(k, 0).is_one();
    for (const auto& [e, c] : value.terms()) shaped = shaped && e.theta + e.k == k;
    if (shaped) memo.values.try_emplace(canonicalize(word), value);
  }
}

void clear_memo() {
  for (Memo& memo : memos()) {
    std::unique_lock lock(memo.mutex);
    memo.values.clear();
  }
}

std::size_t memo_size(const ReduceOptions& options) {
  Memo& memo = memo_for(options);
  std::shared_lock lock(memo.mutex);
  return memo.values.size();
}

}  // namespace sfdc
