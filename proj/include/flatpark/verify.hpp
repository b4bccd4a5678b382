#pragma once

#include "flatpark/bijections.hpp"
#include "flatpark/enumeration.hpp"
#include "flatpark/recursions.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatpark {

/// Sweep bounds. Zero means "use the default for the check".
///  n_max     largest n (ambient size)
///  r_max     largest number of inserted ones
///  k_max     largest run count examined
///  size_max  cap on n + r for the 1_r recursions, on word length for the
///            bijections and the separation recursions
///  set_max   largest insertion multiset tried by shift_down and swap_top
///  s_max     largest s for the separation recursions
struct SweepRange {
  int n_max = 0;
  int r_max = 0;
  int k_max = 0;
  int size_max = 0;
  int set_max = 0;
  int s_max = 0;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  /// False for report-only checks, whose outcome never fails a run.
  bool gating = true;
  std::size_t checked = 0;
  std::vector<std::string> notes;
  std::vector<std::string> counterexamples;
};

/// Every id accepted by verify_theorem: the recursion and bijection names,
/// "flat_to_partition" and "gf_closed_form".
std::vector<std::string> verifiable_ids();

CheckResult verify_recursion(RecursionId id, const SweepRange& range, RecursionEngine& engine);
CheckResult verify_bijection_sweep(BijectionId id, const SweepRange& range, const EnumerationOptions& opts);
/// Report-only: compares the closed generating function with brute force.
CheckResult verify_gf(const SweepRange& range);
/// Dispatch by name; unknown ids raise ArgumentError.
CheckResult verify_theorem(std::string_view id, const SweepRange& range, const EnumerationOptions& opts,
                           RecursionEngine& engine);

/// Runs both recursions over the same sweep; the winner is set when exactly one passes.
struct Adjudication {
  CheckResult first;
  CheckResult second;
  std::optional<std::string> winner;
  std::string summary;
};
Adjudication adjudicate(RecursionId a, RecursionId b, const SweepRange& range, RecursionEngine& engine);

/// Each separation recursion checked against each separation predicate.
struct SeparationCell {
  RecursionId recursion;
  Separation predicate;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::optional<std::string> counterexample;
  bool matches() const noexcept { return total > 0 && matched == total; }
};
std::vector<SeparationCell> separation_matrix(const SweepRange& range, RecursionEngine& engine);

void write_text(std::ostream& out, const CheckResult& result);
nlohmann::ordered_json to_json(const CheckResult& result);
void write_text(std::ostream& out, const Adjudication& adj);
nlohmann::ordered_json to_json(const Adjudication& adj);
void write_text(std::ostream& out, const std::vector<SeparationCell>& matrix);
nlohmann::ordered_json to_json(const std::vector<SeparationCell>& matrix);

}  // namespace flatpark
