#pragma once

#include "flatpark/common.hpp"
#include "flatpark/enumeration.hpp"
#include "flatpark/word.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatpark {

/// flat(PF_n(S)) -> flat(PF_{n-1}(S')), S' = {s - 1 : s in S} + {1}.
/// Keeps the first letter and decrements the rest. S must lie in [2, n].
Word shift_down(const Word& w, int n, const InsertMultiset& S);
/// Inverse of shift_down; n and S describe the domain of shift_down.
Word shift_up(const Word& w, int n, const InsertMultiset& S);

enum class SwapDirection { n_minus_1_to_n, n_to_n_minus_1 };

/// flat(PF_n(S + {n-1})) <-> flat(PF_n(S + {n})) for S in [n-2], by
/// rewriting one of the three letters valued n-1 or n.
Word swap_top(const Word& w, int n, SwapDirection direction);

enum class ShiftDirection { up, down };

/// flat_2(PF_n({l-1})) <-> flat_2(PF_n({l})). Words without exactly two runs
/// are rejected.
Word two_run_shift(const Word& w, int n, int l, ShiftDirection direction);

/// 1 followed by each block cycled to b_2 ... b_m b_1, blocks in order of minima.
Word partition_to_flat(const SetPartition& p);
SetPartition flat_to_partition(const Word& w);

/// Partitions of [n + r] with 1..r separated -> flat(PF_{n+1}(1_r)).
Word rpartition_to_flat(const SetPartition& p, int r);
SetPartition flat_to_rpartition(const Word& w, int r);

enum class BijectionId { shift_down, swap_top, two_run_shift, partition_to_flat, rpartition_to_flat };

std::string_view bijection_name(BijectionId id);
std::optional<BijectionId> parse_bijection(std::string_view name);
const std::vector<BijectionId>& all_bijections();

/// Size parameters. shift_down uses n and S; swap_top uses n and S (the part
/// inside [n-2]); two_run_shift uses n and l; partition_to_flat uses n;
/// rpartition_to_flat uses n and r (partitions of [n + r]).
struct BijectionParams {
  int n = 1;
  InsertMultiset S;
  int l = 2;
  int r = 1;
};

struct BijectionReport {
  std::string name;
  std::string params;
  Count domain_size = 0;
  Count codomain_size = 0;
  bool image_in_codomain = true;
  bool injective = true;
  bool surjective = true;
  bool inverse_composes = true;
  bool statistic_preserved = true;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept {
    return image_in_codomain && injective && surjective && inverse_composes && statistic_preserved &&
           domain_size == codomain_size;
  }
};

/// Exhaustively checks the map on its domain. Failures are reported, never thrown,
/// except for invalid parameters (ArgumentError) and the size ceiling (ResourceError).
BijectionReport verify_bijection(BijectionId id, const BijectionParams& params,
                                 const EnumerationOptions& opts = {});

nlohmann::ordered_json to_json(const BijectionReport& report);

}  // namespace flatpark
