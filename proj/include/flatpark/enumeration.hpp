#pragma once

#include "flatpark/common.hpp"
#include "flatpark/word.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatpark {

enum class Family {
  permutations,
  parking_functions,
  flat_pf,
  s_insertion_pf,
  flat_s_insertion,
  set_partitions,
  restricted_set_partitions,
};

/// CLI spelling: "flat-pf", "flat-s-insertion", ...
std::string_view family_name(Family f);
Family parse_family(std::string_view name);
bool is_word_family(Family f);
bool is_flattened_family(Family f);

/// Which members to enumerate. For word families k filters on the run count;
/// for the partition families it filters on the number of blocks of size >= 2.
/// restricted_set_partitions covers [n + r] with 1..r in distinct blocks.
struct FamilySpec {
  Family family = Family::flat_pf;
  int n = 1;
  std::optional<InsertMultiset> insert;
  std::optional<int> k;
  std::optional<int> r;
};

struct EnumerationOptions {
  std::size_t ceiling = 12;
  unsigned jobs = 1;

  /// Defaults, with the ceiling taken from FLATPARK_CEILING when set.
  static EnumerationOptions from_environment();
};

/// Blocks of [n] ordered by their minima, each block sorted.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// Restricted growth string: rgs[i] is the block index of i + 1.
  static SetPartition from_rgs(std::span<const int> rgs);
  /// "1/23", or "1,10/2,3" when some element exceeds 9.
  static SetPartition parse(std::string_view text);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t big_block_count() const noexcept;
  /// 1..r lie in pairwise distinct blocks.
  bool separates_first(int r) const noexcept;
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Throws ArgumentError for a malformed spec and ResourceError past the ceiling.
void validate(const FamilySpec& spec, const EnumerationOptions& opts = {});

/// Word length of members (n + |S|) or ground-set size for partitions.
std::size_t member_size(const FamilySpec& spec);

/// Lexicographic stream of members. The span is only valid during the call.
void for_each_word(const FamilySpec& spec,
                   const std::function<void(std::span<const Letter>)>& visit,
                   const EnumerationOptions& opts = {});
void for_each_partition(const FamilySpec& spec,
                        const std::function<void(const SetPartition&)>& visit,
                        const EnumerationOptions& opts = {});

std::vector<Word> gen_words(const FamilySpec& spec, const EnumerationOptions& opts = {});
std::vector<SetPartition> gen_partitions(const FamilySpec& spec,
                                         const EnumerationOptions& opts = {});

Count count_family(const FamilySpec& spec, const EnumerationOptions& opts = {});

/// Member counts indexed by run count (word families) or by number of blocks
/// of size >= 2 (partition families). The k field of the spec is ignored.
std::vector<Count> statistic_histogram(const FamilySpec& spec,
                                       const EnumerationOptions& opts = {});

/// One member per line in text form.
void dump_members(std::ostream& out, const FamilySpec& spec,
                  const EnumerationOptions& opts = {});

/// Set partitions of [n] with exactly k blocks of size >= 2.
Count count_T(int n, int k);
/// Set partitions of [n + r] with 1..r in distinct blocks and exactly k blocks of size >= 2.
Count count_Bkr(int n, int r, int k);

enum class Separation { ones_same_run, ones_separate_runs, ones_any_composition };

std::string_view separation_name(Separation mode);
Separation parse_separation(std::string_view name);

/// Separation predicate on a word, with s counting the value 1 among the
/// first s integers:
///  - ones_same_run: every 1 sits in one run, and 2..s sit in distinct runs
///    other than that one.
///  - ones_separate_runs: the ones sit in pairwise distinct runs, and 2..s
///    sit in further pairwise distinct runs.
///  - ones_any_composition: 2..s sit in pairwise distinct runs, none of which
///    contains a 1.
bool satisfies_separation(std::span<const Letter> w, int s, Separation mode);

/// Brute-force count over flat_k(PF_m(1_r)) of words meeting the predicate.
Count count_separated(int s, int r, int m, int k, Separation mode,
                      const EnumerationOptions& opts = {});

}  // namespace flatpark
