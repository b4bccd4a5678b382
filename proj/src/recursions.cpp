#include "flatpark/recursions.hpp"

#include "flatpark/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace flatpark {

namespace {

struct RecursionEntry {
  RecursionId id;
  std::string_view name;
  std::string_view range;
};

constexpr RecursionEntry kRecursions[] = {
    {RecursionId::flat_perm_sum, "flat_perm_sum", "2 <= k < n"},
    {RecursionId::flat_perm_two_term, "flat_perm_two_term", "1 <= k < n"},
    {RecursionId::flat_perm_third, "flat_perm_third", "n >= 3 and 1 <= k <= n-2"},
    {RecursionId::ones_eq1, "ones_eq1", "r = 1 and 2 <= k < n"},
    {RecursionId::ones_two_term, "ones_two_term", "r = 1, n >= 3 and 1 <= k <= n-2"},
    {RecursionId::ones_bell_form, "ones_bell_form", "r = 1, n >= 3 and 1 <= k <= n-2"},
    {RecursionId::r_ones_eq2, "r_ones_eq2", "r >= 1 and 2 <= k < n+r"},
    {RecursionId::r_ones_eq2_amended, "r_ones_eq2_amended", "r >= 1 and 2 <= k < n+r"},
    {RecursionId::r_ones_two_term, "r_ones_two_term", "r >= 1, n >= 2 and k >= 1"},
    {RecursionId::r_ones_peel_statement, "r_ones_peel_statement", "r >= 1, n >= 1 and k >= 1"},
    {RecursionId::r_ones_peel_proof, "r_ones_peel_proof", "r >= 1, n >= 1 and k >= 1"},
    {RecursionId::sep_base, "sep_base", "r = 0 and s-1 <= k < m-s"},
    {RecursionId::sep_ones_same, "sep_ones_same", "r >= 1 and s-1 < k < m-s"},
    {RecursionId::sep_ones_separate, "sep_ones_separate", "r >= 1 and s-1+r < k < m-s"},
    {RecursionId::sep_all_compositions, "sep_all_compositions", "r >= 1 and s-1+r < k < m-s"},
    {RecursionId::flat2_single_insert, "flat2_single_insert", "n >= 3"},
    {RecursionId::hook_sum, "hook_sum", "m >= 1"},
};

// Memo tags outside the RecursionId range for the brute-force routes.
constexpr int kBruteFlat = 100;
constexpr int kBruteOnes = 101;
constexpr int kBruteSeparated = 102;

int ceil_half(int n) { return (n + 1) / 2; }

}  // namespace

std::string_view recursion_name(RecursionId id) {
  for (const auto& e : kRecursions) {
    if (e.id == id) return e.name;
  }
  return "unknown";
}

std::optional<RecursionId> parse_recursion(std::string_view name) {
  for (const auto& e : kRecursions) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

const std::vector<RecursionId>& all_recursions() {
  static const std::vector<RecursionId> ids = [] {
    std::vector<RecursionId> out;
    for (const auto& e : kRecursions) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string range_description(RecursionId id) {
  for (const auto& e : kRecursions) {
    if (e.id == id) return std::string(e.range);
  }
  return {};
}

std::string_view method_name(FlatMethod m) {
  return m == FlatMethod::brute ? "brute" : recursion_name(recursion_of(m));
}

std::string_view method_name(OnesMethod m) {
  return m == OnesMethod::brute ? "brute" : recursion_name(recursion_of(m));
}

RecursionId recursion_of(FlatMethod m) {
  switch (m) {
    case FlatMethod::flat_perm_sum:
      return RecursionId::flat_perm_sum;
    case FlatMethod::flat_perm_two_term:
      return RecursionId::flat_perm_two_term;
    case FlatMethod::flat_perm_third:
      return RecursionId::flat_perm_third;
    case FlatMethod::brute:
      break;
  }
  throw ArgumentError("brute force has no recursion id");
}

RecursionId recursion_of(OnesMethod m) {
  switch (m) {
    case OnesMethod::ones_eq1:
      return RecursionId::ones_eq1;
    case OnesMethod::ones_two_term:
      return RecursionId::ones_two_term;
    case OnesMethod::ones_bell_form:
      return RecursionId::ones_bell_form;
    case OnesMethod::r_ones_eq2:
      return RecursionId::r_ones_eq2;
    case OnesMethod::r_ones_eq2_amended:
      return RecursionId::r_ones_eq2_amended;
    case OnesMethod::r_ones_two_term:
      return RecursionId::r_ones_two_term;
    case OnesMethod::r_ones_peel_statement:
      return RecursionId::r_ones_peel_statement;
    case OnesMethod::r_ones_peel_proof:
      return RecursionId::r_ones_peel_proof;
    case OnesMethod::brute:
      break;
  }
  throw ArgumentError("brute force has no recursion id");
}

RecursionId separation_recursion(int r, Separation mode) {
  if (r == 0) return RecursionId::sep_base;
  switch (mode) {
    case Separation::ones_same_run:
      return RecursionId::sep_ones_same;
    case Separation::ones_separate_runs:
      return RecursionId::sep_ones_separate;
    case Separation::ones_any_composition:
      return RecursionId::sep_all_compositions;
  }
  throw ArgumentError("unknown separation mode");
}

std::optional<Count> MemoTable::find(const Key& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Count MemoTable::insert(const Key& key, const Count& value) {
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, value).first->second;
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

bool RecursionEngine::in_range(FlatMethod method, int n, int k) {
  switch (method) {
    case FlatMethod::brute:
      return n >= 1 && k >= 1 && k <= n;
    case FlatMethod::flat_perm_sum:
      return 2 <= k && k < n;
    case FlatMethod::flat_perm_two_term:
      return 1 <= k && k < n;
    case FlatMethod::flat_perm_third:
      return n >= 3 && 1 <= k && k <= n - 2;
  }
  return false;
}

bool RecursionEngine::in_range(OnesMethod method, int r, int n, int k) {
  switch (method) {
    case OnesMethod::brute:
      return r >= 0 && n >= 1 && k >= 1;
    case OnesMethod::ones_eq1:
      return r == 1 && 2 <= k && k < n;
    case OnesMethod::ones_two_term:
    case OnesMethod::ones_bell_form:
      return r == 1 && n >= 3 && 1 <= k && k <= n - 2;
    case OnesMethod::r_ones_eq2:
    case OnesMethod::r_ones_eq2_amended:
      return r >= 1 && n >= 1 && 2 <= k && k < n + r;
    case OnesMethod::r_ones_two_term:
      return r >= 1 && n >= 2 && k >= 1;
    case OnesMethod::r_ones_peel_statement:
    case OnesMethod::r_ones_peel_proof:
      return r >= 1 && n >= 1 && k >= 1;
  }
  return false;
}

bool RecursionEngine::in_separated_range(RecursionId id, int s, int r, int m, int k) {
  const int t = s - 1;
  const int n = m - s;
  if (s < 1 || r < 0 || n < 1 || k < 1) return false;
  switch (id) {
    case RecursionId::sep_base:
      return r == 0 && t <= k && k < n;
    case RecursionId::sep_ones_same:
      return r >= 1 && t < k && k < n;
    case RecursionId::sep_ones_separate:
    case RecursionId::sep_all_compositions:
      return r >= 1 && t + r < k && k < n;
    default:
      return false;
  }
}

std::optional<Count> RecursionEngine::flat_base(int n, int k) {
  if (n < 1 || k < 1 || k > ceil_half(n)) return Count(0);
  if (k == 1) return Count(1);
  if (n == 3 && k == 2) return Count(1);
  return std::nullopt;
}

std::optional<Count> RecursionEngine::ones_base(int r, int n, int k) {
  if (r == 0) return flat_base(n, k);
  if (n < 1 || k < 1 || k > ceil_half(n + r)) return Count(0);
  if (k == 1) return Count(1);
  if (n == 1) return Count(0);  // the only word is 1^{r+1}
  if (r == 1) {
    if (n == 2 && k == 2) return Count(1);
    if (n == 3 && k == 2) return Count(4);
    if (n == 4 && k == 3) return Count(3);
  }
  return std::nullopt;
}

Count RecursionEngine::flat_recursive(FlatMethod method, int n, int k) {
  const int tag = static_cast<int>(recursion_of(method));
  if (auto hit = memo_.find({tag, 0, n, k, 0})) return *hit;

  // table[nn][kk] for 1 <= nn <= n, 0 <= kk <= k; index 0 is the zero ledger row.
  std::vector<std::vector<Count>> table(static_cast<std::size_t>(n) + 1,
                                        std::vector<Count>(static_cast<std::size_t>(k) + 1, 0));
  auto f = [&](int nn, int kk) -> const Count& {
    static const Count zero = 0;
    if (nn < 1 || kk < 1) return zero;
    return table[nn][kk];
  };
  for (int nn = 1; nn <= n; ++nn) {
    for (int kk = 1; kk <= k; ++kk) {
      Count value = 0;
      if (!in_range(method, nn, kk)) {
        auto base = flat_base(nn, kk);
        if (!base) {
          throw std::logic_error("base-case ledger has no entry for f_{" + std::to_string(nn) +
                                 "," + std::to_string(kk) + "}");
        }
        value = *base;
      } else if (method == FlatMethod::flat_perm_sum) {
        for (int m = 1; m <= nn - 2; ++m) value += (binomial(nn - 1, m) - 1) * f(m, kk - 1);
      } else if (method == FlatMethod::flat_perm_two_term) {
        value = kk * f(nn - 1, kk) + (nn - 2) * f(nn - 2, kk - 1);
      } else {
        value = f(nn - 1, kk);
        for (int i = 1; i <= nn - 2; ++i) value += binomial(nn - 2, i) * f(nn - 1 - i, kk - 1);
      }
      table[nn][kk] = memo_.insert({tag, 0, nn, kk, 0}, value);
    }
  }
  return table[n][k];
}

Count RecursionEngine::f_flat(int n, int k, FlatMethod method) {
  if (n < 1 || k < 1 || k > n) {
    throw ArgumentError("f_flat(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") needs 1 <= k <= n");
  }
  if (method == FlatMethod::brute) {
    if (auto hit = memo_.find({kBruteFlat, 0, n, k, 0})) return *hit;
    const auto hist = statistic_histogram(
        {.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset{}}, brute_options_);
    for (int kk = 1; kk <= n; ++kk) {
      const auto idx = static_cast<std::size_t>(kk);
      memo_.insert({kBruteFlat, 0, n, kk, 0}, idx < hist.size() ? hist[idx] : Count(0));
    }
    return *memo_.find({kBruteFlat, 0, n, k, 0});
  }
  if (!in_range(method, n, k)) {
    const auto id = recursion_of(method);
    throw ArgumentError(std::string(recursion_name(id)) + " is stated for " +
                        range_description(id) + "; got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k));
  }
  return flat_recursive(method, n, k);
}

Count RecursionEngine::ones_recursive(OnesMethod method, int r, int n, int k) {
  const int tag = static_cast<int>(recursion_of(method));
  if (auto hit = memo_.find({tag, r, n, k, 0})) return *hit;

  // Flattened-partition terms f_{m,j}, from flat_perm_two_term.
  auto flat = [&](int m, int j) -> Count {
    if (m < 1 || j < 1 || j > m) return 0;
    return flat_recursive(FlatMethod::flat_perm_two_term, m, j);
  };

  const int r_lo = (method == OnesMethod::ones_eq1 || method == OnesMethod::ones_two_term ||
                    method == OnesMethod::ones_bell_form)
                       ? r
                       : 1;
  // table[rr][nn][kk]
  std::vector<std::vector<std::vector<Count>>> table(
      static_cast<std::size_t>(r) + 1,
      std::vector<std::vector<Count>>(static_cast<std::size_t>(n) + 1,
                                      std::vector<Count>(static_cast<std::size_t>(k) + 1, 0)));
  auto g = [&](int rr, int nn, int kk) -> Count {
    if (rr == 0) return flat(nn, kk);
    if (nn < 1 || kk < 1) return 0;
    return table[rr][nn][kk];
  };

  for (int rr = r_lo; rr <= r; ++rr) {
    for (int nn = 1; nn <= n; ++nn) {
      for (int kk = 1; kk <= k; ++kk) {
        Count value = 0;
        if (!in_range(method, rr, nn, kk)) {
          auto base = ones_base(rr, nn, kk);
          if (!base) {
            throw std::logic_error("base-case ledger has no entry for f(1_" + std::to_string(rr) +
                                   ";" + std::to_string(nn) + "," + std::to_string(kk) + ")");
          }
          value = *base;
        } else {
          switch (method) {
            case OnesMethod::ones_eq1:
              for (int m = 1; m <= nn - 1; ++m) value += (binomial(nn, m) - 1) * flat(m, kk - 1);
              break;
            case OnesMethod::ones_two_term:
              value = kk * g(1, nn - 1, kk) + (nn - 2) * g(1, nn - 2, kk - 1) + flat(nn - 1, kk - 1);
              break;
            case OnesMethod::ones_bell_form:
              value = flat(nn, kk);
              for (int i = 1; i <= nn - 1; ++i) value += binomial(nn - 1, i) * flat(nn - i, kk - 1);
              break;
            case OnesMethod::r_ones_eq2:
              for (int m = 1; m <= nn - 1; ++m) {
                const Count c = binomial(nn - 1, m - 1);
                for (int i = 1; i <= rr; ++i) value += c * g(rr - i, m, kk - 1);
                value += (c - 1) * flat(m, kk - 1);
              }
              break;
            case OnesMethod::r_ones_eq2_amended:
              for (int m = 1; m <= nn - 1; ++m) {
                for (int i = 1; i <= rr; ++i) value += binomial(nn - 1, m - 1) * g(rr - i, m, kk - 1);
                value += (binomial(nn - 1, m) - 1) * flat(m, kk - 1);
              }
              break;
            case OnesMethod::r_ones_two_term:
              value = kk * g(rr, nn - 1, kk) + (nn - 2) * g(rr, nn - 2, kk - 1) +
                      rr * g(rr - 1, nn - 1, kk - 1);
              break;
            case OnesMethod::r_ones_peel_statement:
              value = g(rr - 1, nn, kk);
              for (int i = 1; i <= nn - 1; ++i) value += binomial(nn - 1, i) * g(rr - 1, nn - i, kk - 1);
              break;
            case OnesMethod::r_ones_peel_proof:
              value = g(rr - 1, nn, kk);
              for (int i = 1; i <= nn - 1; ++i) {
                value += binomial(nn - 1, i) * g(rr - 1, nn - i - 1, kk - 1);
              }
              break;
            case OnesMethod::brute:
              break;
          }
        }
        table[rr][nn][kk] = memo_.insert({tag, rr, nn, kk, 0}, value);
      }
    }
  }
  return table[r][n][k];
}

Count RecursionEngine::f_ones(int r, int n, int k, OnesMethod method) {
  if (r < 0 || n < 1 || k < 1) {
    throw ArgumentError("f_ones(" + std::to_string(r) + ", " + std::to_string(n) + ", " +
                        std::to_string(k) + ") needs r >= 0, n >= 1, k >= 1");
  }
  if (r == 0) {
    if (k > n) return 0;
    return f_flat(n, k, method == OnesMethod::brute ? FlatMethod::brute : FlatMethod::flat_perm_two_term);
  }
  if (method == OnesMethod::brute) {
    if (auto hit = memo_.find({kBruteOnes, r, n, k, 0})) return *hit;
    const auto hist = statistic_histogram(
        {.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset::ones(r)}, brute_options_);
    const auto idx = static_cast<std::size_t>(k);
    return memo_.insert({kBruteOnes, r, n, k, 0}, idx < hist.size() ? hist[idx] : Count(0));
  }
  if (!in_range(method, r, n, k)) {
    const auto id = recursion_of(method);
    throw ArgumentError(std::string(recursion_name(id)) + " is stated for " +
                        range_description(id) + "; got r = " + std::to_string(r) +
                        ", n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  return ones_recursive(method, r, n, k);
}

Count RecursionEngine::composition_sum(int parts, int n, int runs_left) {
  if (runs_left < 1) return 0;
  std::vector<int> comp;
  Count total = 0;
  auto rec = [&](auto&& self, int used) -> void {
    if (static_cast<int>(comp.size()) == parts) {
      const int rest = n + 1 - used;
      if (rest >= 1 && runs_left <= rest) {
        total += multinomial(n, comp) * flat_recursive(FlatMethod::flat_perm_two_term, rest, runs_left);
      }
      return;
    }
    for (int i = 1; used + i <= n; ++i) {
      comp.push_back(i);
      self(self, used + i);
      comp.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

Count RecursionEngine::f_separated(int s, int r, int m, int k, Separation mode,
                                   SeparatedMethod method) {
  if (s < 1 || r < 0 || m < 1 || k < 1) {
    throw ArgumentError("f_separated needs s >= 1, r >= 0, m >= 1, k >= 1");
  }
  const int mode_tag = static_cast<int>(mode);
  if (method == SeparatedMethod::brute) {
    if (auto hit = memo_.find({kBruteSeparated + mode_tag, s, r, m, k})) return *hit;
    return memo_.insert({kBruteSeparated + mode_tag, s, r, m, k},
                        count_separated(s, r, m, k, mode, brute_options_));
  }
  return separated_formula(separation_recursion(r, mode), s, r, m, k);
}

Count RecursionEngine::separated_formula(RecursionId id, int s, int r, int m, int k) {
  if (!in_separated_range(id, s, r, m, k)) {
    throw ArgumentError(std::string(recursion_name(id)) + " is stated for " +
                        range_description(id) + "; got s = " + std::to_string(s) +
                        ", r = " + std::to_string(r) + ", m = " + std::to_string(m) +
                        ", k = " + std::to_string(k));
  }
  const int tag = static_cast<int>(id);
  if (auto hit = memo_.find({tag, s, r, m, k})) return *hit;

  const int t = s - 1;
  const int n = m - s;
  Count value = 0;
  switch (id) {
    case RecursionId::sep_base:
    case RecursionId::sep_ones_same:
      value = composition_sum(t, n, k - t);
      break;
    case RecursionId::sep_ones_separate:
      value = composition_sum(t + r, n, k - t - r);
      break;
    case RecursionId::sep_all_compositions:
      for (int x = 1; x <= r + 1; ++x) {
        value += binomial(r, x - 1) * composition_sum(t + x - 1, n, k - t - x + 1);
      }
      break;
    default:
      break;
  }
  return memo_.insert({tag, s, r, m, k}, value);
}

RecursionEngine& default_engine() {
  static RecursionEngine engine(EnumerationOptions::from_environment());
  return engine;
}

Count f_flat(int n, int k, FlatMethod method) { return default_engine().f_flat(n, k, method); }

Count f_ones(int r, int n, int k, OnesMethod method) {
  return default_engine().f_ones(r, n, k, method);
}

Count f_separated(int s, int r, int m, int k, Separation mode, SeparatedMethod method) {
  return default_engine().f_separated(s, r, m, k, mode, method);
}

Count flat2_single_insert(int n) {
  if (n < 3) throw ArgumentError("flat2_single_insert needs n >= 3");
  Count total = 0;
  for (int i = 0; i <= n - 3; ++i) {
    Count term = 1;
    term <<= i;
    total += term * (n - 1 - i);
  }
  return total;
}

Count hook_sum(int m) {
  if (m < 1) throw ArgumentError("hook_sum needs m >= 1");
  Count total = 0;
  for (int i = 0; i <= m - 1; ++i) {
    Count term = 1;
    term <<= i;
    total += term * (m + 1 - i);
  }
  return total;
}

}  // namespace flatpark
