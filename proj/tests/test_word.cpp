#include <catch_amalgamated.hpp>

#include <set>

#include "generators.hpp"
#include "sfdc/errors.hpp"
#include "sfdc/word.hpp"

using namespace sfdc;

namespace {

Word w(const char* text) { return parse_word(text); }

std::vector<Letter> ids(std::initializer_list<int> v) {
  std::vector<Letter> out;
  for (int x : v) out.push_back(static_cast<Letter>(x));
  return out;
}

}  // namespace

TEST_CASE("parse_word accepts contiguous letters without renaming") {
  Word x = w("aabccb");
  CHECK(std::vector<Letter>(x.letters().begin(), x.letters().end()) == ids({0, 0, 1, 2, 2, 1}));
  CHECK(w("bbaa").to_string() == "bbaa");
  CHECK_FALSE(w("bbaa").is_canonical());
  CHECK(w("").empty());
  CHECK(w("  abab ").to_string() == "abab");
}

TEST_CASE("parse_word maps comma tokens by first occurrence") {
  Word x = w("x,y,y,x");
  CHECK(x.to_string() == "abba");
  CHECK(w("foo, bar ,foo,bar").to_string() == "abab");
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(w("aba"), LetterCountError);
  CHECK_THROWS_AS(w("aaab"), LetterCountError);
  CHECK_THROWS_AS(w("aAbb"), ParseError);
  CHECK_THROWS_AS(w("x,,x"), EmptyTokenError);
  CHECK_THROWS_AS(w("x,x,"), EmptyTokenError);
  CHECK_THROWS_AS(Word(ids({0, 1})), LetterCountError);
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(Word(ids({1, 1, 0, 0}))) == w("aabb"));
  CHECK(canonicalize(w("aabccb")) == w("aabccb"));
  CHECK(canonicalize(Word(ids({2, 0, 2, 0}))) == w("abab"));
  CHECK(canonicalize(Word()) == Word());
}

TEST_CASE("enumerate_words order and counts") {
  auto k2 = enumerate_words(2);
  REQUIRE(k2.size() == 3);
  CHECK(k2[0].to_string() == "aabb");
  CHECK(k2[1].to_string() == "abab");
  CHECK(k2[2].to_string() == "abba");
  CHECK(enumerate_words(0).size() == 1);
  CHECK(enumerate_words(1).front().to_string() == "aa");

  const std::uint64_t expected[] = {1, 1, 3, 15, 105, 945, 10395};
  for (int k = 0; k <= 6; ++k) {
    CHECK(double_factorial_odd(k) == expected[k]);
    std::set<Word> seen;
    std::size_t count = 0;
    for_each_word(k, [&](const Word& x) {
      ++count;
      CHECK(x.is_canonical());
      seen.insert(x);
    });
    CHECK(count == expected[k]);
    CHECK(seen.size() == count);
  }
}

TEST_CASE("enumerate_words respects the cap") {
  CHECK_THROWS_AS(enumerate_words(9), SizeLimitError);
  CHECK_THROWS_AS(enumerate_words(4, 3), SizeLimitError);
  CHECK(enumerate_words(3, 3).size() == 15);
}

TEST_CASE("enumeration is sorted by pairing") {
  auto words = enumerate_words(4);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].pairing() < words[i].pairing());
}

TEST_CASE("reverse and concat examples") {
  CHECK(reverse(w("aabccb")) == w("abbacc"));
  CHECK(reverse(w("abba")) == w("abba"));
  CHECK(reverse(Word()) == Word());
  CHECK(concat(w("aa"), w("aa")) == w("aabb"));
  CHECK(concat(Word(), w("abab")) == w("abab"));
  CHECK(concat(w("abba"), w("aa")) == w("abbacc"));
}

TEST_CASE("pairing and partner") {
  Word x = w("aabccb");
  std::vector<PositionPair> expected = {{1, 2}, {3, 6}, {4, 5}};
  CHECK(x.pairing() == expected);
  CHECK(x.partner(2) == 5);
  CHECK(x.partner(5) == 2);
  CHECK(Word::from_pairing(expected) == x);
  std::vector<PositionPair> bad = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(Word::from_pairing(bad), IndexError);
}

TEST_CASE("to_string falls back to numeric ids past 26 letters") {
  std::vector<Letter> letters;
  for (int i = 0; i < 27; ++i) letters.insert(letters.end(), {static_cast<Letter>(i), static_cast<Letter>(i)});
  Word big(letters);
  std::string s = big.to_string();
  CHECK(s.substr(0, 8) == "0,0,1,1,");
  CHECK(parse_word(s) == big);
}

TEST_CASE("render ascii arcs") {
  CHECK(render(w("aa"), RenderFormat::ascii_arc).text == "+-+\na a\n");
  CHECK(render(w("abba"), RenderFormat::ascii_arc).text == "+-----+\n| +-+ |\na b b a\n");
  CHECK(render(w("abab"), RenderFormat::ascii_arc).text == "  +---+\n+-|-+ |\na b a b\n");
  CHECK(render(Word(), RenderFormat::ascii_arc).text == "(empty)\n");
}

TEST_CASE("render dot edges") {
  std::string dot = render(w("abab"), RenderFormat::dot).text;
  CHECK(dot.find("1 -- 3;") != std::string::npos);
  CHECK(dot.find("2 -- 4;") != std::string::npos);
  std::string nested = render(w("aabccb"), RenderFormat::dot).text;
  for (const char* edge : {"1 -- 2;", "3 -- 6;", "4 -- 5;"}) CHECK(nested.find(edge) != std::string::npos);
  CHECK(nested.rfind("graph word {", 0) == 0);
  CHECK_THROWS_AS(parse_render_format("svg"), UnsupportedFormatError);
  CHECK(parse_render_format("ascii-arc") == RenderFormat::ascii_arc);
}

TEST_CASE("render vertex and arc counts match the pairing") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Word x = canonicalize(testgen::random_word(rng, static_cast<int>(testgen::uniform(rng, 1, 6))));
    std::string dot = render(x, RenderFormat::dot).text;
    std::size_t edges = 0;
    for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
    CHECK(edges == x.half_length());
    std::string ascii = render(x, RenderFormat::ascii_arc).text;
    std::size_t corners = static_cast<std::size_t>(std::count(ascii.begin(), ascii.end(), '+'));
    CHECK(corners == x.size());
  }
}

TEST_CASE("word properties on random inputs") {
  testgen::Rng rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(testgen::uniform(rng, 0, 7));
    Word raw = testgen::random_word(rng, k);
    Word c = canonicalize(raw);
    INFO("word " << raw.to_string());
    CHECK(canonicalize(c) == c);
    CHECK(c.pairing() == raw.pairing());
    CHECK(reverse(reverse(c)) == c);
    CHECK(Word::from_pairing(c.pairing()) == c);
    std::set<Letter> used(c.letters().begin(), c.letters().end());
    CHECK(used.size() == static_cast<std::size_t>(k));
    if (k > 0) CHECK(*used.rbegin() == k - 1);

    Word u = testgen::random_word(rng, static_cast<int>(testgen::uniform(rng, 0, 3)));
    Word v = testgen::random_word(rng, static_cast<int>(testgen::uniform(rng, 0, 3)));
    CHECK(concat(concat(u, v), c) == concat(u, concat(v, c)));
    CHECK(concat(Word(), c) == c);
    CHECK(concat(c, Word()) == c);
  }
}
