#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sfdc/algebra/format.hpp"
#include "sfdc/conjecture.hpp"
#include "sfdc/linking.hpp"
#include "sfdc/oracle/oracle.hpp"
#include "sfdc/reduction.hpp"
#include "sfdc/word.hpp"

namespace sfdc::cli {

namespace {

constexpr int kOracleCap = 4;
constexpr const char* kCacheFile = "reduce-memo.json";

// Memo persistence under $SFDC_CACHE_DIR. Failures only warn.
class CacheSession {
 public:
  explicit CacheSession(std::ostream& err) : err_(err) {
    const char* dir = std::getenv("SFDC_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return;
    path_ = std::filesystem::path(dir) / kCacheFile;
    load();
  }
  CacheSession(const CacheSession&) = delete;
  CacheSession& operator=(const CacheSession&) = delete;
  ~CacheSession() { save(); }

 private:
  void load() {
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) return;
    try {
      std::ifstream in(path_);
      nlohmann::json j = nlohmann::json::parse(in);
      std::vector<std::pair<Word, DiagramPoly>> entries;
      for (const auto& [key, value] : j.at("entries").items()) {
        entries.emplace_back(parse_word(key), diagram_poly_from_json(value));
      }
      import_memo(entries);
      loaded_ = entries.size();
    } catch (const std::exception& e) {
      err_ << "warning: ignoring unreadable cache " << path_.string() << ": " << e.what() << "\n";
    }
  }

  void save() {
    if (path_.empty()) return;
    try {
      const auto entries = export_memo();
      if (entries.size() == loaded_) return;
      nlohmann::json j;
      j["entries"] = nlohmann::json::object();
      for (const auto& [word, value] : entries) j["entries"][word.to_string()] = to_json(value);
      std::filesystem::create_directories(path_.parent_path());
      const auto tmp = std::filesystem::path(path_.string() + ".tmp");
      {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
        if (!out) throw std::runtime_error("write failed");
      }
      std::filesystem::rename(tmp, path_);
    } catch (const std::exception& e) {
      err_ << "warning: could not write cache " << path_.string() << ": " << e.what() << "\n";
    }
  }

  std::ostream& err_;
  std::filesystem::path path_;
  std::size_t loaded_ = 0;
};

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_diagram(const std::string& ascii) {
  std::string out;
  std::istringstream lines(ascii);
  std::string line;
  while (std::getline(lines, line)) {
    if (!out.empty()) out += "<br>";
    std::string cell;
    for (char c : line) {
      if (c == ' ') cell += "&nbsp;";
      else if (c == '|') cell += "&#124;";
      else cell += c;
    }
    out += "<code>" + cell + "</code>";
  }
  return out;
}

int cmd_words(int k, bool count, const std::string& render_name, std::ostream& out) {
  if (count) {
    std::uint64_t total = 0;
    for_each_word(k, [&](const Word&) { ++total; });
    out << total << "\n";
    return kSuccess;
  }
  std::optional<RenderFormat> format;
  if (!render_name.empty()) format = parse_render_format(render_name);
  for_each_word(k, [&](const Word& w) {
    out << w.to_string() << "\n";
    if (format) out << render(w, *format).text << "\n";
  });
  return kSuccess;
}

int cmd_reduce(const std::string& text, bool json, std::ostream& out) {
  const DiagramPoly p = reduce(parse_word(text));
  if (json) {
    out << to_json(p).dump() << "\n";
  } else {
    out << to_string(p) << "\n";
  }
  return kSuccess;
}

int cmd_link(const std::string& text, const std::string& pairs, std::ostream& out) {
  const LinkedWord lw = multi_link(parse_word(text), parse_link_spec(pairs));
  out << "circles: " << lw.circles << "\n";
  out << "word: " << lw.word.to_string() << "\n";
  out << "value: " << to_string(linked_value(lw)) << "\n";
  return kSuccess;
}

int cmd_conjecture(int k, const std::string& mode, const std::vector<long>& samples, bool json_only,
                   std::ostream& out) {
  VerifyMode m;
  if (mode == "symbolic") {
    m = VerifyMode::symbolic;
  } else if (mode == "numeric") {
    m = VerifyMode::numeric;
  } else {
    throw ParseError("unknown mode '" + mode + "'");
  }
  const ConjectureReport report = verify_conjectures(k, m, samples);
  if (!json_only) out << summary(report) << "\n";
  out << to_json(report).dump(2) << "\n";
  return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_oracle(int n, int p, int max_k, const std::string& word_text, std::uint64_t seed,
               std::size_t eigen_index, std::size_t point_count, std::ostream& out) {
  if (n < 2 || n > 6) throw IndexError("oracle-check supports 2 <= n <= 6");
  if (p < 0) throw IndexError("p must be non-negative");
  std::vector<Word> words;
  if (!word_text.empty()) {
    words.push_back(parse_word(word_text));
  } else {
    if (max_k < 0 || max_k > kOracleCap) {
      throw SizeLimitError("--max-k must be between 0 and " + std::to_string(kOracleCap));
    }
    for (int k = 0; k <= max_k; ++k) {
      for (const Word& w : enumerate_words(k)) words.push_back(w);
    }
  }
  int top = 0;
  for (const Word& w : words) top = std::max(top, static_cast<int>(w.size()));
  if (top > 2 * kOracleCap) throw SizeLimitError("word too long for the oracle");

  const oracle::HarmonicEigenfunction f = oracle::make_eigenfunction(n, p, eigen_index);
  const auto tower = oracle::derivative_tower(f, std::max(top, n));
  const auto points = oracle::sphere_points(n, point_count, &f.poly);
  const Rational theta = -f.lambda();
  out << "sphere S^" << n << ", p = " << p << ", f = " << f.poly.to_string() << ", θ = " << to_string(theta)
      << ", points = " << points.size() << "\n";
  out << std::left << std::setw(18) << "word" << std::setw(16) << "oracle" << std::setw(16) << "engine"
      << "agree\n";
  bool all = true;
  for (const Word& w : words) {
    const Rational engine = substitute(reduce(w), theta, Rational(1), n);
    bool agree = true;
    Rational first;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Rational value = oracle::contract_word(tower[w.size()], w, points[i], f.poly);
      if (i == 0) first = value;
      agree &= value == engine;
    }
    all &= agree;
    out << std::setw(18) << (w.empty() ? "(empty)" : w.to_string()) << std::setw(16) << to_string(first)
        << std::setw(16) << to_string(engine) << (agree ? "yes" : "NO") << "\n";
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) perm[static_cast<std::size_t>(s)] = s;
  std::mt19937_64 rng(seed);
  for (std::size_t s = perm.size(); s > 1; --s) std::swap(perm[s - 1], perm[rng() % s]);
  const Rational volume = oracle::contract_volume(tower[static_cast<std::size_t>(n)], n, 0, perm, points.front());
  const bool volume_ok = sgn(volume) == 0;
  out << "volume form contraction (seed " << seed << "): " << to_string(volume) << (volume_ok ? "" : "  NONZERO")
      << "\n";
  all &= volume_ok;
  out << "verdict: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? kSuccess : kVerificationFailure;
}

int cmd_table(int max_k, const std::string& format, std::ostream& out) {
  if (format != "md" && format != "csv" && format != "json") {
    throw UnsupportedFormatError("unknown table format '" + format + "'");
  }
  if (max_k < 0 || max_k > kDefaultWordCap) throw SizeLimitError("--max-k exceeds the word cap");
  nlohmann::json rows = nlohmann::json::array();
  if (format == "md") {
    out << "| k | word | diagram | polynomial |\n|---|---|---|---|\n";
  } else if (format == "csv") {
    out << "k,word,diagram,polynomial\n";
  }
  for (int k = 1; k <= max_k; ++k) {
    for_each_word(k, [&](const Word& w) {
      const DiagramPoly p = reduce(w);
      std::string diagram = render(w, RenderFormat::ascii_arc).text;
      if (!diagram.empty() && diagram.back() == '\n') diagram.pop_back();
      if (format == "md") {
        out << "| " << k << " | " << w.to_string() << " | " << md_diagram(diagram) << " | " << to_string(p) << " |\n";
      } else if (format == "csv") {
        out << k << "," << w.to_string() << "," << csv_field(diagram) << ","
            << csv_field(to_string(p, ThetaStyle::ascii)) << "\n";
      } else {
        rows.push_back({{"k", k}, {"word", w.to_string()}, {"diagram", diagram}, {"polynomial", to_string(p)},
                        {"poly", to_json(p)}});
      }
    });
  }
  if (format == "json") out << rows.dump(2) << "\n";
  return kSuccess;
}

}  // namespace

std::string grammar() {
  return "usage: sfdc <command> [options]\n"
         "  words --k K [--list|--count] [--render ascii|dot]\n"
         "  reduce <word> [--json]\n"
         "  link <word> --pairs i:j[,i:j...]\n"
         "  conjecture --k K [--mode symbolic|numeric] [--n-samples a,b,...] [--json]\n"
         "  oracle-check --n N --p P [--max-k M] [--word W] [--rng-seed S] [--eigen-index I] [--points C]\n"
         "  table --max-k M --format md|csv|json\n"
         "words are letter strings (\"aabccb\") or comma-separated tokens (\"x,y,y,x\").\n"
         "environment: SFDC_CACHE_DIR persists the reduction memo.\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diagram calculus for covariant derivatives of eigenfunctions on space forms", "sfdc"};
  app.require_subcommand(1, 1);

  int k = 0;
  bool list = false;
  bool count = false;
  std::string render_name;
  auto* words = app.add_subcommand("words", "enumerate canonical words of half-length K");
  words->add_option("--k", k, "half-length")->required();
  auto* list_flag = words->add_flag("--list", list, "print every word (default)");
  words->add_flag("--count", count, "print the number of words")->excludes(list_flag);
  words->add_option("--render", render_name, "also draw each word: ascii or dot");

  std::string word_text;
  bool json = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "print the polynomial of a word");
  reduce_cmd->add_option("word", word_text, "the word")->required();
  reduce_cmd->add_flag("--json", json, "print the JSON form");

  std::string pairs;
  auto* link_cmd = app.add_subcommand("link", "apply linking operators to a word");
  link_cmd->add_option("word", word_text, "the word")->required();
  link_cmd->add_option("--pairs", pairs, "positions to link, i:j[,i:j...]")->required();

  std::string mode = "symbolic";
  std::vector<long> samples = kDefaultNumericSamples;
  auto* conj = app.add_subcommand("conjecture", "solve the linking system and test the product formula");
  conj->add_option("--k", k, "half-length")->required();
  conj->add_option("--mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  conj->add_option("--n-samples", samples, "integer dimensions for numeric mode")->delimiter(',');
  conj->add_flag("--json", json, "print only the JSON report");

  int n = 0;
  int p = 0;
  int max_k = 3;
  std::uint64_t seed = 20240601;
  std::size_t eigen_index = 0;
  std::size_t point_count = 2;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare against exact sphere computations");
  oracle_cmd->add_option("--n", n, "sphere dimension")->required();
  oracle_cmd->add_option("--p", p, "eigenfunction degree")->required();
  oracle_cmd->add_option("--max-k", max_k, "largest half-length to check");
  oracle_cmd->add_option("--word", word_text, "check a single word");
  oracle_cmd->add_option("--rng-seed", seed, "seed for the volume-form permutation");
  oracle_cmd->add_option("--eigen-index", eigen_index, "basis eigenfunction index");
  oracle_cmd->add_option("--points", point_count, "number of sphere points")->check(CLI::Range(1, 16));

  std::string format;
  auto* table = app.add_subcommand("table", "tabulate the polynomials of all words up to a length");
  table->add_option("--max-k", max_k, "largest half-length")->required();
  table->add_option("--format", format, "md, csv or json")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << grammar();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << grammar();
    return kUsageError;
  }

  try {
    if (*words) return cmd_words(k, count, render_name, out);
    CacheSession cache(err);
    if (*reduce_cmd) return cmd_reduce(word_text, json, out);
    if (*link_cmd) return cmd_link(word_text, pairs, out);
    if (*conj) return cmd_conjecture(k, mode, samples, json, out);
    if (*oracle_cmd) return cmd_oracle(n, p, max_k, word_text, seed, eigen_index, point_count, out);
    if (*table) return cmd_table(max_k, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n" << grammar();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  err << grammar();
  return kUsageError;
}

}  // namespace sfdc::cli
