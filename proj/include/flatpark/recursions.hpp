#pragma once

#include "flatpark/common.hpp"
#include "flatpark/enumeration.hpp"

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace flatpark {

/// Every counting formula the library evaluates, by name.
enum class RecursionId {
  flat_perm_sum,
  flat_perm_two_term,
  flat_perm_third,
  ones_eq1,
  ones_two_term,
  ones_bell_form,
  r_ones_eq2,
  r_ones_eq2_amended,
  r_ones_two_term,
  r_ones_peel_statement,
  r_ones_peel_proof,
  sep_base,
  sep_ones_same,
  sep_ones_separate,
  sep_all_compositions,
  flat2_single_insert,
  hook_sum,
};

std::string_view recursion_name(RecursionId id);
std::optional<RecursionId> parse_recursion(std::string_view name);
const std::vector<RecursionId>& all_recursions();

/// Counting route for f_{n,k}: brute force or one of the recursions.
enum class FlatMethod { brute, flat_perm_sum, flat_perm_two_term, flat_perm_third };
/// Counting route for f(1_r; n, k).
enum class OnesMethod {
  brute,
  ones_eq1,
  ones_two_term,
  ones_bell_form,
  r_ones_eq2,
  r_ones_eq2_amended,
  r_ones_two_term,
  r_ones_peel_statement,
  r_ones_peel_proof,
};
enum class SeparatedMethod { brute, recursion };

std::string_view method_name(FlatMethod m);
std::string_view method_name(OnesMethod m);
RecursionId recursion_of(FlatMethod m);  // brute has no RecursionId; throws
RecursionId recursion_of(OnesMethod m);
/// The recursion f_separated dispatches to: sep_base for r = 0, else by mode.
RecursionId separation_recursion(int r, Separation mode);

/// Human-readable parameter range of a recursion, as used in error messages.
std::string range_description(RecursionId id);

/// Write-once memo keyed by (formula tag, integer key). Concurrent readers,
/// exclusive inserters; an entry is never overwritten.
class MemoTable {
 public:
  using Key = std::array<int, 5>;

  std::optional<Count> find(const Key& key) const;
  /// Returns the stored value, which is the first one ever inserted for key.
  Count insert(const Key& key, const Count& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Count> entries_;
};

/// Evaluates f_{n,k}, f(1_r; n, k) and the separated counts by every route.
///
/// Recursions are evaluated bottom-up over a box of keys. A key inside the
/// theorem's stated range is computed by its formula; any other key comes
/// from the base-case ledger:
///   f_{n,k} = 0 for n < 1, k < 1 or k > ceil(n/2); f_{n,1} = 1;
///   f(1_r; n, k) = 0 for n < 1, k < 1 or k > ceil((n+r)/2); f(1_r; n, 1) = 1;
///   f(1_r; 1, k) = 0 for k >= 2;
///   seed values f_{3,2} = 1, f({1};2,2) = 1, f({1};3,2) = 4, f({1};4,3) = 3.
/// Terms f_{m,j} that appear inside the 1_r and separated formulas are taken
/// from flat_perm_two_term.
class RecursionEngine {
 public:
  RecursionEngine() = default;
  explicit RecursionEngine(EnumerationOptions brute_options) : brute_options_(brute_options) {}

  Count f_flat(int n, int k, FlatMethod method = FlatMethod::brute);
  Count f_ones(int r, int n, int k, OnesMethod method = OnesMethod::brute);
  /// f^{(s)}(1_r; m, k): words in flat_k(PF_m(1_r)) whose first s integers
  /// are separated as `mode` prescribes.
  Count f_separated(int s, int r, int m, int k, Separation mode, SeparatedMethod method);
  /// The right-hand side of one separation recursion, independent of any predicate.
  Count separated_formula(RecursionId id, int s, int r, int m, int k);

  static bool in_range(FlatMethod method, int n, int k);
  static bool in_range(OnesMethod method, int r, int n, int k);
  static bool in_separated_range(RecursionId id, int s, int r, int m, int k);

  /// Base-case ledger entries, or nullopt where the ledger is silent.
  static std::optional<Count> flat_base(int n, int k);
  static std::optional<Count> ones_base(int r, int n, int k);

  const MemoTable& memo() const noexcept { return memo_; }

 private:
  Count flat_recursive(FlatMethod method, int n, int k);
  Count ones_recursive(OnesMethod method, int r, int n, int k);
  Count composition_sum(int parts, int n, int runs_left);

  EnumerationOptions brute_options_{};
  MemoTable memo_;
};

/// Process-wide engine behind the free functions below.
RecursionEngine& default_engine();

Count f_flat(int n, int k, FlatMethod method = FlatMethod::brute);
Count f_ones(int r, int n, int k, OnesMethod method = OnesMethod::brute);
Count f_separated(int s, int r, int m, int k, Separation mode,
                  SeparatedMethod method = SeparatedMethod::recursion);

/// |flat_2(PF_n({l}))| for 2 <= l <= n, as sum_{i=0}^{n-3} 2^i (n-1-i). Needs n >= 3.
Count flat2_single_insert(int n);
/// sum_{i=0}^{m-1} 2^i (m+1-i): products of parts, each increased by one, over hooks of m.
Count hook_sum(int m);

}  // namespace flatpark
