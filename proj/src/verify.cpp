#include "flatpark/verify.hpp"

#include "flatpark/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flatpark {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

class Tally {
 public:
  explicit Tally(CheckResult& result) : result_(result) {}

  void pass() { ++result_.checked; }
  void fail(std::string what) {
    ++result_.checked;
    ++failures_;
    result_.passed = false;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(std::move(what));
  }
  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
  std::size_t failures() const noexcept { return failures_; }

  void summarize() {
    std::ostringstream s;
    if (failures_ == 0) {
      s << "all " << result_.checked << " cases agree";
    } else {
      s << failures_ << " of " << result_.checked << " cases disagree";
    }
    result_.notes.insert(result_.notes.begin(), s.str());
  }

 private:
  CheckResult& result_;
  std::size_t failures_ = 0;
};

std::string key(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

std::string mismatch(const std::string& where, std::string_view label, const Count& got, const Count& truth) {
  return where + ": " + std::string(label) + " gives " + to_string(got) + ", brute force " + to_string(truth);
}

std::optional<FlatMethod> flat_method(RecursionId id) {
  switch (id) {
    case RecursionId::flat_perm_sum:
      return FlatMethod::flat_perm_sum;
    case RecursionId::flat_perm_two_term:
      return FlatMethod::flat_perm_two_term;
    case RecursionId::flat_perm_third:
      return FlatMethod::flat_perm_third;
    default:
      return std::nullopt;
  }
}

std::optional<OnesMethod> ones_method(RecursionId id) {
  switch (id) {
    case RecursionId::ones_eq1:
      return OnesMethod::ones_eq1;
    case RecursionId::ones_two_term:
      return OnesMethod::ones_two_term;
    case RecursionId::ones_bell_form:
      return OnesMethod::ones_bell_form;
    case RecursionId::r_ones_eq2:
      return OnesMethod::r_ones_eq2;
    case RecursionId::r_ones_eq2_amended:
      return OnesMethod::r_ones_eq2_amended;
    case RecursionId::r_ones_two_term:
      return OnesMethod::r_ones_two_term;
    case RecursionId::r_ones_peel_statement:
      return OnesMethod::r_ones_peel_statement;
    case RecursionId::r_ones_peel_proof:
      return OnesMethod::r_ones_peel_proof;
    default:
      return std::nullopt;
  }
}

bool single_one(OnesMethod m) {
  return m == OnesMethod::ones_eq1 || m == OnesMethod::ones_two_term || m == OnesMethod::ones_bell_form;
}

bool is_separation(RecursionId id) {
  return id == RecursionId::sep_base || id == RecursionId::sep_ones_same || id == RecursionId::sep_ones_separate ||
         id == RecursionId::sep_all_compositions;
}

/// The predicate a separation recursion is meant to count. sep_base covers r = 0,
/// where all three predicates coincide.
std::vector<Separation> paired_predicates(RecursionId id) {
  switch (id) {
    case RecursionId::sep_ones_same:
      return {Separation::ones_same_run};
    case RecursionId::sep_ones_separate:
      return {Separation::ones_separate_runs};
    case RecursionId::sep_all_compositions:
      return {Separation::ones_any_composition};
    default:
      return {Separation::ones_same_run, Separation::ones_separate_runs, Separation::ones_any_composition};
  }
}

constexpr Separation kPredicates[] = {Separation::ones_same_run, Separation::ones_separate_runs,
                                      Separation::ones_any_composition};

// Calls visit(s, r, m, k) for every in-range key of a separation recursion.
template <class Visit>
void for_each_separation_key(RecursionId id, const SweepRange& range, Visit&& visit) {
  const int s_max = pick(range.s_max, 2);
  const int r_lo = id == RecursionId::sep_base ? 0 : 1;
  const int r_hi = id == RecursionId::sep_base ? 0 : pick(range.r_max, 2);
  const int length_max = pick(range.size_max, 9);
  for (int r = r_lo; r <= r_hi; ++r) {
    for (int s = 1; s <= s_max; ++s) {
      for (int m = s + 1; m + r <= length_max; ++m) {
        if (range.n_max > 0 && m > range.n_max) break;
        const int k_hi = range.k_max > 0 ? range.k_max : m;
        for (int k = 1; k <= k_hi; ++k) {
          if (RecursionEngine::in_separated_range(id, s, r, m, k)) visit(s, r, m, k);
        }
      }
    }
  }
}

CheckResult verify_separation(RecursionId id, const SweepRange& range, RecursionEngine& engine) {
  CheckResult result{.id = std::string(recursion_name(id))};
  Tally tally(result);
  for_each_separation_key(id, range, [&](int s, int r, int m, int k) {
    const Count got = engine.separated_formula(id, s, r, m, k);
    for (Separation p : paired_predicates(id)) {
      const Count truth = engine.f_separated(s, r, m, k, p, SeparatedMethod::brute);
      tally.expect(got == truth, [&] {
        return mismatch(key({{"s", s}, {"r", r}, {"m", m}, {"k", k}}) + " [" + std::string(separation_name(p)) + "]",
                        recursion_name(id), got, truth);
      });
    }
  });
  tally.summarize();
  for (const auto& cell : separation_matrix(range, engine)) {
    if (cell.recursion != id) continue;
    result.notes.push_back(std::string(separation_name(cell.predicate)) + ": " +
                           (cell.matches() ? "matches" : "differs") + " (" + std::to_string(cell.matched) + "/" +
                           std::to_string(cell.total) + ")");
  }
  return result;
}

CheckResult verify_two_run_closed_form(RecursionId id, const SweepRange& range, const EnumerationOptions& opts) {
  CheckResult result{.id = std::string(recursion_name(id))};
  Tally tally(result);
  const int n_max = pick(range.n_max, 7);
  std::string values;
  for (int n = 3; n <= n_max; ++n) {
    const Count formula = flat2_single_insert(n);
    const Count hooks = hook_sum(n - 2);
    tally.expect(formula == hooks, [&] {
      return key({{"n", n}}) + ": flat2_single_insert gives " + to_string(formula) + ", hook_sum(n-2) gives " +
             to_string(hooks);
    });
    for (int l = 2; l <= n; ++l) {
      const Count truth =
          count_family({.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset{l}, .k = 2}, opts);
      tally.expect(formula == truth,
                   [&] { return mismatch(key({{"n", n}, {"l", l}}), recursion_name(id), formula, truth); });
    }
    values += (values.empty() ? "" : ", ") + to_string(formula);
  }
  tally.summarize();
  if (!values.empty()) result.notes.push_back("values for n = 3.." + std::to_string(n_max) + ": " + values);
  return result;
}

std::vector<InsertMultiset> multisets(int lo, int hi, int size) {
  std::vector<InsertMultiset> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.emplace_back(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  if (size == 0 || lo <= hi) rec(rec, lo);
  return out;
}

}  // namespace

std::vector<std::string> verifiable_ids() {
  std::vector<std::string> ids;
  for (auto id : all_recursions()) ids.emplace_back(recursion_name(id));
  for (auto id : all_bijections()) ids.emplace_back(bijection_name(id));
  ids.emplace_back("flat_to_partition");
  ids.emplace_back("gf_closed_form");
  return ids;
}

CheckResult verify_recursion(RecursionId id, const SweepRange& range, RecursionEngine& engine) {
  if (is_separation(id)) return verify_separation(id, range, engine);
  if (id == RecursionId::flat2_single_insert || id == RecursionId::hook_sum) {
    return verify_two_run_closed_form(id, range, {});
  }

  CheckResult result{.id = std::string(recursion_name(id))};
  Tally tally(result);
  auto guarded = [&](const std::string& where, auto&& eval) -> std::optional<Count> {
    try {
      return eval();
    } catch (const std::logic_error& e) {
      tally.fail(where + ": " + e.what());
      return std::nullopt;
    }
  };

  if (auto m = flat_method(id)) {
    const int n_max = pick(range.n_max, 9);
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 1; k <= std::min(n, pick(range.k_max, n)); ++k) {
        if (!RecursionEngine::in_range(*m, n, k)) continue;
        const std::string where = key({{"n", n}, {"k", k}});
        auto got = guarded(where, [&] { return engine.f_flat(n, k, *m); });
        if (!got) continue;
        const Count truth = engine.f_flat(n, k, FlatMethod::brute);
        tally.expect(*got == truth, [&] { return mismatch(where, recursion_name(id), *got, truth); });
      }
    }
  } else if (auto o = ones_method(id)) {
    const int size_max = pick(range.size_max, 10);
    const int r_lo = 1;
    const int r_hi = single_one(*o) ? 1 : pick(range.r_max, size_max - 1);
    for (int r = r_lo; r <= r_hi; ++r) {
      const int n_hi = single_one(*o) ? pick(range.n_max, 8) : std::min(pick(range.n_max, size_max), size_max - r);
      for (int n = 1; n <= n_hi; ++n) {
        const int k_hi = pick(range.k_max, (n + r + 1) / 2 + 1);
        for (int k = 1; k <= k_hi; ++k) {
          if (!RecursionEngine::in_range(*o, r, n, k)) continue;
          const std::string where = key({{"r", r}, {"n", n}, {"k", k}});
          auto got = guarded(where, [&] { return engine.f_ones(r, n, k, *o); });
          if (!got) continue;
          const Count truth = engine.f_ones(r, n, k, OnesMethod::brute);
          tally.expect(*got == truth, [&] { return mismatch(where, recursion_name(id), *got, truth); });
        }
      }
    }
  }
  tally.summarize();
  result.notes.push_back("stated range: " + range_description(id));
  return result;
}

CheckResult verify_bijection_sweep(BijectionId id, const SweepRange& range, const EnumerationOptions& opts) {
  CheckResult result{.id = std::string(bijection_name(id))};
  Tally tally(result);
  const int length_max = pick(range.size_max, 10);
  const int set_max = pick(range.set_max, 2);
  std::vector<BijectionParams> domains;

  switch (id) {
    case BijectionId::shift_down:
      for (int n = 2; n <= pick(range.n_max, length_max); ++n) {
        for (int t = 0; t <= set_max && n + t <= length_max; ++t) {
          for (auto& S : multisets(2, n, t)) domains.push_back({.n = n, .S = std::move(S)});
        }
      }
      break;
    case BijectionId::swap_top:
      for (int n = 2; n <= pick(range.n_max, length_max - 1); ++n) {
        for (int t = 0; t <= set_max && n + t + 1 <= length_max; ++t) {
          for (auto& S : multisets(1, n - 2, t)) domains.push_back({.n = n, .S = std::move(S)});
        }
      }
      break;
    case BijectionId::two_run_shift:
      for (int n = 2; n <= pick(range.n_max, length_max - 1); ++n) {
        for (int l = 2; l <= n; ++l) domains.push_back({.n = n, .l = l});
      }
      break;
    case BijectionId::partition_to_flat:
      for (int n = 1; n <= pick(range.n_max, length_max - 1); ++n) domains.push_back({.n = n});
      break;
    case BijectionId::rpartition_to_flat:
      for (int r = 1; r <= pick(range.r_max, length_max - 2); ++r) {
        for (int n = 0; n + r + 1 <= length_max && (range.n_max <= 0 || n <= range.n_max); ++n) {
          domains.push_back({.n = n, .r = r});
        }
      }
      break;
  }

  std::vector<std::string> failed_at;
  std::string two_run_sizes;
  int last_n = 0;
  for (const auto& params : domains) {
    const auto report = verify_bijection(id, params, opts);
    if (report.passed()) {
      tally.pass();
    } else {
      failed_at.push_back(report.params);
      tally.fail(report.params + ": sizes " + to_string(report.domain_size) + " -> " +
                 to_string(report.codomain_size) +
                 (report.counterexamples.empty() ? "" : ", e.g. " + report.counterexamples.front()));
    }
    if (id == BijectionId::two_run_shift && params.n >= 3 && params.n != last_n) {
      last_n = params.n;
      two_run_sizes += (two_run_sizes.empty() ? "" : ", ") + to_string(report.codomain_size);
    }
  }
  tally.summarize();
  result.notes.front() = std::to_string(domains.size() - failed_at.size()) + " of " + std::to_string(domains.size()) +
                         " domains pass (word length <= " + std::to_string(length_max) + ")";
  if (id == BijectionId::two_run_shift && !two_run_sizes.empty()) {
    result.notes.push_back("|flat_2(PF_n({l}))| for l >= 2, n = 3, 4, ...: " + two_run_sizes);
    const bool only_l2 = std::all_of(failed_at.begin(), failed_at.end(),
                                     [](const std::string& p) { return p.ends_with(" l=2"); });
    if (!failed_at.empty() && only_l2) {
      result.notes.push_back("every failure is at l = 2: flat_2(PF_n({1})) is larger than flat_2(PF_n({2}))");
    }
  }
  return result;
}

CheckResult verify_gf(const SweepRange& range) {
  CheckResult result{.id = "gf_closed_form", .gating = false};
  const auto cmp = compare_gf(pick(range.n_max, 7), pick(range.k_max, 4));
  result.checked = cmp.cells.size();
  result.notes.push_back(cmp.verdict());
  for (const auto& c : cmp.cells) {
    if (!c.equal && result.counterexamples.size() < kMaxCounterexamples) {
      result.counterexamples.push_back(key({{"k", c.k}, {"n", c.n}}) + ": claimed " + c.claimed.str() + ", actual " +
                                       c.actual.str());
    }
  }
  return result;
}

CheckResult verify_theorem(std::string_view id, const SweepRange& range, const EnumerationOptions& opts,
                           RecursionEngine& engine) {
  if (id == "gf_closed_form") return verify_gf(range);
  if (auto r = parse_recursion(id)) return verify_recursion(*r, range, engine);
  if (auto b = parse_bijection(id)) {
    auto result = verify_bijection_sweep(*b, range, opts);
    result.id = std::string(id);
    return result;
  }
  throw ArgumentError("unknown theorem id '" + std::string(id) + "'");
}

Adjudication adjudicate(RecursionId a, RecursionId b, const SweepRange& range, RecursionEngine& engine) {
  Adjudication adj{.first = verify_recursion(a, range, engine), .second = verify_recursion(b, range, engine)};
  const auto describe = [](const CheckResult& r) {
    return r.id + (r.passed ? " matches brute force on all " + std::to_string(r.checked) + " keys"
                            : " fails: " + r.notes.front() +
                                  (r.counterexamples.empty() ? "" : "; e.g. " + r.counterexamples.front()));
  };
  if (adj.first.passed != adj.second.passed) {
    adj.winner = adj.first.passed ? adj.first.id : adj.second.id;
    adj.summary = "winner: " + *adj.winner + ". " + describe(adj.first) + ". " + describe(adj.second) + ".";
  } else {
    adj.summary = std::string(adj.first.passed ? "both pass" : "neither passes") + ". " + describe(adj.first) +
                  ". " + describe(adj.second) + ".";
  }
  return adj;
}

std::vector<SeparationCell> separation_matrix(const SweepRange& range, RecursionEngine& engine) {
  std::vector<SeparationCell> cells;
  for (RecursionId id : {RecursionId::sep_base, RecursionId::sep_ones_same, RecursionId::sep_ones_separate,
                         RecursionId::sep_all_compositions}) {
    for (Separation p : kPredicates) {
      SeparationCell cell{.recursion = id, .predicate = p};
      for_each_separation_key(id, range, [&](int s, int r, int m, int k) {
        ++cell.total;
        const Count got = engine.separated_formula(id, s, r, m, k);
        const Count truth = engine.f_separated(s, r, m, k, p, SeparatedMethod::brute);
        if (got == truth) {
          ++cell.matched;
        } else if (!cell.counterexample) {
          cell.counterexample = mismatch(key({{"s", s}, {"r", r}, {"m", m}, {"k", k}}), recursion_name(id), got, truth);
        }
      });
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_text(std::ostream& out, const CheckResult& result) {
  out << result.id << ": " << (result.gating ? (result.passed ? "PASS" : "FAIL") : "REPORT") << '\n';
  for (const auto& n : result.notes) out << "  " << n << '\n';
  for (const auto& c : result.counterexamples) out << "  counterexample " << c << '\n';
}

nlohmann::ordered_json to_json(const CheckResult& result) {
  nlohmann::ordered_json j;
  j["id"] = result.id;
  j["status"] = result.gating ? (result.passed ? "pass" : "fail") : "report";
  j["checked"] = result.checked;
  j["notes"] = result.notes;
  j["counterexamples"] = result.counterexamples;
  return j;
}

void write_text(std::ostream& out, const Adjudication& adj) {
  write_text(out, adj.first);
  write_text(out, adj.second);
  out << adj.summary << '\n';
}

nlohmann::ordered_json to_json(const Adjudication& adj) {
  nlohmann::ordered_json j;
  j["results"] = {to_json(adj.first), to_json(adj.second)};
  j["winner"] = adj.winner ? nlohmann::ordered_json(*adj.winner) : nlohmann::ordered_json();
  j["summary"] = adj.summary;
  return j;
}

void write_text(std::ostream& out, const std::vector<SeparationCell>& matrix) {
  for (const auto& c : matrix) {
    out << recursion_name(c.recursion) << " vs " << separation_name(c.predicate) << ": "
        << (c.total == 0 ? "no keys" : c.matches() ? "matches" : "differs") << " (" << c.matched << "/" << c.total
        << ")";
    if (c.counterexample) out << "; " << *c.counterexample;
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const std::vector<SeparationCell>& matrix) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : matrix) {
    nlohmann::ordered_json row;
    row["recursion"] = recursion_name(c.recursion);
    row["predicate"] = separation_name(c.predicate);
    row["matched"] = c.matched;
    row["total"] = c.total;
    row["matches"] = c.matches();
    row["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nlohmann::ordered_json();
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace flatpark
