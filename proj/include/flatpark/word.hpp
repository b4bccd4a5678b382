#pragma once

#include "flatpark/common.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatpark {

using Letter = int;

/// Immutable finite sequence of letters. Letters are meant to be positive, but
/// that is checked by the predicates, not here, so intermediate values produced
/// inside the bijections can still be carried around as Words.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  /// Accepts the digit-string form ("14232") and the comma form ("1,10,3").
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Digit string when every letter is in 1..9, comma-separated otherwise.
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Maximal weakly increasing segmentation of a word.
struct RunDecomposition {
  std::vector<Word> runs;
  std::vector<Letter> leading_values;

  std::size_t count() const noexcept { return runs.size(); }
};

/// Sorted bag of insertion values; ones(r) is the bag of r ones.
class InsertMultiset {
 public:
  InsertMultiset() = default;
  InsertMultiset(std::initializer_list<Letter> values);
  explicit InsertMultiset(std::vector<Letter> values);

  static InsertMultiset ones(int r);
  /// Comma list ("2,2,3"); the empty string is the empty bag.
  static InsertMultiset parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const Letter> values() const noexcept { return values_; }
  std::size_t multiplicity(Letter v) const;
  std::string str() const;

  /// Every value lies in [lo, hi].
  bool within(Letter lo, Letter hi) const;

  friend bool operator==(const InsertMultiset&, const InsertMultiset&) = default;

 private:
  std::vector<Letter> values_;
};

/// True iff the sorted copy of w satisfies w'_i <= i. Throws ArgumentError if
/// w is empty or its length differs from n.
bool is_parking_function(std::span<const Letter> w, std::size_t n);
inline bool is_parking_function(const Word& w, std::size_t n) {
  return is_parking_function(w.letters(), n);
}

RunDecomposition run_decomposition(const Word& w);

/// Number of maximal weak-ascent runs; 0 for the empty span.
std::size_t run_count(std::span<const Letter> w) noexcept;
inline std::size_t run_count(const Word& w) noexcept { return run_count(w.letters()); }

/// Run leading values weakly increase. Throws ArgumentError on an empty word.
bool is_flattened(std::span<const Letter> w);
inline bool is_flattened(const Word& w) { return is_flattened(w.letters()); }

/// ceil(n/2), the largest run count of a flattened parking function of length n.
std::size_t max_runs_bound(std::size_t n);

/// The letter multiset of w is exactly [n] plus S.
bool has_insertion_multiset(std::span<const Letter> w, int n, const InsertMultiset& s);

/// w is a flattened S-insertion parking function over [n].
bool is_flat_insertion_word(const Word& w, int n, const InsertMultiset& s);

}  // namespace flatpark
