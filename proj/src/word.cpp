#include "flatpark/word.hpp"

#include <algorithm>
#include <charconv>

namespace flatpark {

namespace {

Letter parse_letter(std::string_view token, std::string_view whole) {
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ArgumentError("cannot parse letter '" + std::string(token) + "' in '" +
                        std::string(whole) + "'");
  }
  return value;
}

std::vector<Letter> parse_comma_list(std::string_view text) {
  std::vector<Letter> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_letter(text.substr(start, comma - start), text));
    start = comma + 1;
  }
  return out;
}

}  // namespace

Word Word::parse(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return Word(parse_comma_list(text));
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ArgumentError("cannot parse word '" + std::string(text) + "'");
    }
    out.push_back(c - '0');
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  const bool digits = std::all_of(letters_.begin(), letters_.end(),
                                  [](Letter a) { return a >= 1 && a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

InsertMultiset::InsertMultiset(std::initializer_list<Letter> values)
    : InsertMultiset(std::vector<Letter>(values)) {}

InsertMultiset::InsertMultiset(std::vector<Letter> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

InsertMultiset InsertMultiset::ones(int r) {
  if (r < 0) throw ArgumentError("ones(r) needs r >= 0");
  return InsertMultiset(std::vector<Letter>(static_cast<std::size_t>(r), 1));
}

InsertMultiset InsertMultiset::parse(std::string_view text) {
  if (text.empty()) return {};
  return InsertMultiset(parse_comma_list(text));
}

std::size_t InsertMultiset::multiplicity(Letter v) const {
  auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

std::string InsertMultiset::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

bool InsertMultiset::within(Letter lo, Letter hi) const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](Letter v) { return v >= lo && v <= hi; });
}

bool is_parking_function(std::span<const Letter> w, std::size_t n) {
  if (w.empty()) throw ArgumentError("is_parking_function: empty word");
  if (w.size() != n) {
    throw ArgumentError("is_parking_function: word length " + std::to_string(w.size()) +
                        " differs from n = " + std::to_string(n));
  }
  std::vector<Letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] < 1 || static_cast<std::size_t>(sorted[i]) > i + 1) return false;
  }
  return true;
}

RunDecomposition run_decomposition(const Word& w) {
  if (w.empty()) throw ArgumentError("run_decomposition: empty word");
  RunDecomposition out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i - 1] > w[i]) {
      out.runs.emplace_back(w.letters().subspan(start, i - start));
      out.leading_values.push_back(w[start]);
      start = i;
    }
  }
  return out;
}

std::size_t run_count(std::span<const Letter> w) noexcept {
  if (w.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) ++runs;
  }
  return runs;
}

bool is_flattened(std::span<const Letter> w) {
  if (w.empty()) throw ArgumentError("is_flattened: empty word");
  Letter lead = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) {
      if (w[i] < lead) return false;
      lead = w[i];
    }
  }
  return true;
}

std::size_t max_runs_bound(std::size_t n) {
  if (n == 0) throw ArgumentError("max_runs_bound: n must be positive");
  return (n + 1) / 2;
}

bool has_insertion_multiset(std::span<const Letter> w, int n, const InsertMultiset& s) {
  if (n < 0 || w.size() != static_cast<std::size_t>(n) + s.size()) return false;
  std::vector<Letter> expected;
  expected.reserve(w.size());
  for (Letter v = 1; v <= n; ++v) expected.push_back(v);
  expected.insert(expected.end(), s.values().begin(), s.values().end());
  std::sort(expected.begin(), expected.end());
  std::vector<Letter> got(w.begin(), w.end());
  std::sort(got.begin(), got.end());
  return got == expected;
}

bool is_flat_insertion_word(const Word& w, int n, const InsertMultiset& s) {
  return !w.empty() && has_insertion_multiset(w.letters(), n, s) &&
         is_parking_function(w, w.size()) && is_flattened(w);
}

}  // namespace flatpark
