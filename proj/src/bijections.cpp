#include "flatpark/bijections.hpp"

#include "flatpark/export.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

namespace flatpark {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::vector<int> letter_counts(const Word& w, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (Letter a : w) {
    require(a >= 1 && a <= n, "letter " + std::to_string(a) + " outside [1, " + std::to_string(n) + "] in " + w.str());
    ++counts[static_cast<std::size_t>(a)];
  }
  return counts;
}

// Rewrites one of the three letters valued lo or hi, following the three
// position patterns. Raising turns an lo into hi, lowering does the reverse.
Word rewrite_pattern(const Word& w, Letter lo, Letter hi, bool raise) {
  std::vector<std::size_t> pos;
  std::string pattern;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == lo || w[i] == hi) {
      pos.push_back(i);
      pattern += w[i] == lo ? 'L' : 'H';
    }
  }
  require(pos.size() == 3, "expected three letters valued " + std::to_string(lo) + " or " +
                               std::to_string(hi) + " in " + w.str());
  std::size_t target = 0;
  if (raise && pattern == "LLH") {
    target = pos[1];
  } else if (raise && pattern == "LHL") {
    target = pos[0];
  } else if (raise && pattern == "HLL") {
    target = pos[2];
  } else if (!raise && pattern == "LHH") {
    target = pos[1];
  } else if (!raise && pattern == "HHL") {
    target = pos[0];
  } else if (!raise && pattern == "HLH") {
    target = pos[2];
  } else {
    throw DomainError("no case applies to " + w.str());
  }
  std::vector<Letter> out(w.begin(), w.end());
  out[target] = raise ? hi : lo;
  return Word(std::move(out));
}

InsertMultiset shifted_down(const InsertMultiset& S) {
  std::vector<Letter> v{1};
  for (Letter s : S.values()) v.push_back(s - 1);
  return InsertMultiset(std::move(v));
}

InsertMultiset with(const InsertMultiset& S, Letter extra) {
  std::vector<Letter> v(S.values().begin(), S.values().end());
  v.push_back(extra);
  return InsertMultiset(std::move(v));
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string text(const Word& w) { return w.str(); }
std::string text(const SetPartition& p) { return p.str(); }

constexpr std::size_t kMaxCounterexamples = 10;

template <class Domain>
struct MapUnderTest {
  std::function<Word(const Domain&)> forward;
  std::function<Domain(const Word&)> inverse;
  std::function<bool(const Domain&, const Word&)> statistic;
};

template <class Domain>
void check_map(BijectionReport& report, const std::vector<Domain>& domain, const std::vector<Word>& codomain,
               const MapUnderTest<Domain>& map, unsigned jobs) {
  report.domain_size = domain.size();
  report.codomain_size = codomain.size();

  std::vector<std::optional<Word>> images(domain.size());
  std::vector<char> back_ok(domain.size(), 0);
  std::vector<char> stat_ok(domain.size(), 0);
  parallel_for(domain.size(), jobs, [&](std::size_t i) {
    try {
      Word y = map.forward(domain[i]);
      stat_ok[i] = map.statistic(domain[i], y);
      try {
        back_ok[i] = map.inverse(y) == domain[i];
      } catch (const std::exception&) {
        back_ok[i] = 0;
      }
      images[i] = std::move(y);
    } catch (const std::exception&) {
      images[i].reset();
    }
  });

  std::vector<char> forward_ok(codomain.size(), 0);
  parallel_for(codomain.size(), jobs, [&](std::size_t i) {
    try {
      forward_ok[i] = map.forward(map.inverse(codomain[i])) == codomain[i];
    } catch (const std::exception&) {
      forward_ok[i] = 0;
    }
  });

  auto note = [&](std::string line) {
    if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back(std::move(line));
  };

  std::set<Word> hit;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!images[i]) {
      report.image_in_codomain = false;
      report.inverse_composes = false;
      note(text(domain[i]) + " -> rejected");
      continue;
    }
    const Word& y = *images[i];
    if (!std::binary_search(codomain.begin(), codomain.end(), y)) {
      report.image_in_codomain = false;
      note(text(domain[i]) + " -> " + y.str() + " (outside codomain)");
    }
    if (!hit.insert(y).second) {
      report.injective = false;
      note(text(domain[i]) + " -> " + y.str() + " (image repeated)");
    }
    if (!stat_ok[i]) {
      report.statistic_preserved = false;
      note(text(domain[i]) + " -> " + y.str() + " (statistic changed)");
    }
    if (!back_ok[i]) {
      report.inverse_composes = false;
      note(text(domain[i]) + " -> " + y.str() + " (inverse does not return it)");
    }
  }
  for (std::size_t i = 0; i < codomain.size(); ++i) {
    if (!hit.contains(codomain[i])) {
      report.surjective = false;
      note(codomain[i].str() + " (not hit)");
    }
    if (!forward_ok[i]) {
      report.inverse_composes = false;
      note(codomain[i].str() + " (forward of inverse differs)");
    }
  }
}

bool same_runs(const Word& a, const Word& b) { return run_count(a) == run_count(b); }

bool runs_match_blocks(const SetPartition& p, const Word& w) { return run_count(w) == 1 + p.big_block_count(); }

}  // namespace

Word shift_down(const Word& w, int n, const InsertMultiset& S) {
  if (n < 2 || !S.within(2, n)) throw ArgumentError("shift_down needs n >= 2 and S inside [2, n]");
  require(is_flat_insertion_word(w, n, S), w.str() + " is not in flat(PF_" + std::to_string(n) + "({" + S.str() + "}))");
  std::vector<Letter> out(w.begin(), w.end());
  for (std::size_t i = 1; i < out.size(); ++i) --out[i];
  return Word(std::move(out));
}

Word shift_up(const Word& w, int n, const InsertMultiset& S) {
  if (n < 2 || !S.within(2, n)) throw ArgumentError("shift_up needs n >= 2 and S inside [2, n]");
  const InsertMultiset target = shifted_down(S);
  require(is_flat_insertion_word(w, n - 1, target),
          w.str() + " is not in flat(PF_" + std::to_string(n - 1) + "({" + target.str() + "}))");
  std::vector<Letter> out(w.begin(), w.end());
  for (std::size_t i = 1; i < out.size(); ++i) ++out[i];
  return Word(std::move(out));
}

Word swap_top(const Word& w, int n, SwapDirection direction) {
  if (n < 2) throw ArgumentError("swap_top needs n >= 2");
  require(!w.empty() && is_flattened(w), w.str() + " is not flattened");
  const auto counts = letter_counts(w, n);
  require(std::all_of(counts.begin() + 1, counts.end(), [](int c) { return c >= 1; }),
          w.str() + " misses a value of [" + std::to_string(n) + "]");
  const bool forward = direction == SwapDirection::n_minus_1_to_n;
  const int want_low = forward ? 2 : 1;
  const int want_high = forward ? 1 : 2;
  require(counts[static_cast<std::size_t>(n - 1)] == want_low && counts[static_cast<std::size_t>(n)] == want_high,
          w.str() + " has the wrong number of " + std::to_string(n - 1) + "s and " + std::to_string(n) + "s");
  return rewrite_pattern(w, n - 1, n, forward);
}

Word two_run_shift(const Word& w, int n, int l, ShiftDirection direction) {
  if (l < 2 || l > n) throw ArgumentError("two_run_shift needs 2 <= l <= n");
  const bool up = direction == ShiftDirection::up;
  const InsertMultiset S{up ? l - 1 : l};
  require(is_flat_insertion_word(w, n, S), w.str() + " is not in flat(PF_" + std::to_string(n) + "({" + S.str() + "}))");
  require(run_count(w) == 2, w.str() + " has " + std::to_string(run_count(w)) + " runs, not 2");
  return rewrite_pattern(w, l - 1, l, up);
}

Word partition_to_flat(const SetPartition& p) {
  std::vector<Letter> out{1};
  for (const auto& block : p.blocks()) {
    out.insert(out.end(), block.begin() + 1, block.end());
    out.push_back(block.front());
  }
  return Word(std::move(out));
}

SetPartition flat_to_partition(const Word& w) {
  require(w.size() >= 2, "word too short for a partition image");
  const int n = static_cast<int>(w.size()) - 1;
  require(is_flat_insertion_word(w, n, InsertMultiset{1}), w.str() + " is not in flat(PF_" + std::to_string(n) + "({1}))");
  // Each block closes at its minimum, which is smaller than everything after it.
  std::vector<std::vector<int>> blocks;
  std::vector<int> segment;
  Letter suffix_min = n + 1;
  std::vector<char> closes(w.size(), 0);
  for (std::size_t i = w.size(); i-- > 1;) {
    if (w[i] < suffix_min) {
      closes[i] = 1;
      suffix_min = w[i];
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    segment.push_back(w[i]);
    if (closes[i]) {
      std::vector<int> block{segment.back()};
      block.insert(block.end(), segment.begin(), segment.end() - 1);
      blocks.push_back(std::move(block));
      segment.clear();
    }
  }
  SetPartition p;
  try {
    p = SetPartition(n, std::move(blocks));
  } catch (const ArgumentError& e) {
    throw DomainError(w.str() + " does not come from a set partition: " + e.what());
  }
  require(partition_to_flat(p) == w, w.str() + " does not come from a set partition");
  return p;
}

Word rpartition_to_flat(const SetPartition& p, int r) {
  if (r < 1) throw ArgumentError("rpartition_to_flat needs r >= 1");
  require(p.n() >= r && p.separates_first(r), p.str() + " does not keep 1.." + std::to_string(r) + " apart");
  const Word cycled = partition_to_flat(p);
  std::vector<Letter> out(cycled.begin(), cycled.end());
  for (Letter& a : out) a = a <= r ? 1 : a - (r - 1);
  return Word(std::move(out));
}

SetPartition flat_to_rpartition(const Word& w, int r) {
  if (r < 1) throw ArgumentError("flat_to_rpartition needs r >= 1");
  const int m = static_cast<int>(w.size()) - r;
  require(m >= 1 && is_flat_insertion_word(w, m, InsertMultiset::ones(r)),
          w.str() + " is not a flattened 1_" + std::to_string(r) + "-insertion word");
  std::vector<Letter> out(w.begin(), w.end());
  int next_one = 0;
  for (Letter& a : out) {
    if (a > 1) {
      a += r - 1;
    } else {
      a = std::max(1, next_one);
      ++next_one;
    }
  }
  SetPartition p = flat_to_partition(Word(std::move(out)));
  require(p.separates_first(r), w.str() + " maps to a partition joining two of 1.." + std::to_string(r));
  return p;
}

namespace {

struct BijectionEntry {
  BijectionId id;
  std::string_view name;
};

constexpr BijectionEntry kBijections[] = {
    {BijectionId::shift_down, "shift_down"},
    {BijectionId::swap_top, "swap_top"},
    {BijectionId::two_run_shift, "two_run_shift"},
    {BijectionId::partition_to_flat, "partition_to_flat"},
    {BijectionId::rpartition_to_flat, "rpartition_to_flat"},
};

}  // namespace

std::string_view bijection_name(BijectionId id) {
  for (const auto& e : kBijections) {
    if (e.id == id) return e.name;
  }
  return "unknown";
}

std::optional<BijectionId> parse_bijection(std::string_view name) {
  for (const auto& e : kBijections) {
    if (e.name == name) return e.id;
  }
  if (name == "flat_to_partition") return BijectionId::partition_to_flat;
  return std::nullopt;
}

const std::vector<BijectionId>& all_bijections() {
  static const std::vector<BijectionId> ids = [] {
    std::vector<BijectionId> out;
    for (const auto& e : kBijections) out.push_back(e.id);
    return out;
  }();
  return ids;
}

BijectionReport verify_bijection(BijectionId id, const BijectionParams& params, const EnumerationOptions& opts) {
  BijectionReport report;
  report.name = std::string(bijection_name(id));
  const int n = params.n;
  switch (id) {
    case BijectionId::shift_down: {
      if (n < 2 || !params.S.within(2, n)) throw ArgumentError("shift_down needs n >= 2 and S inside [2, n]");
      report.params = "n=" + std::to_string(n) + " S={" + params.S.str() + "}";
      const auto domain = gen_words({.family = Family::flat_s_insertion, .n = n, .insert = params.S}, opts);
      const auto codomain =
          gen_words({.family = Family::flat_s_insertion, .n = n - 1, .insert = shifted_down(params.S)}, opts);
      check_map<Word>(report, domain, codomain,
                      {[&](const Word& w) { return shift_down(w, n, params.S); },
                       [&](const Word& w) { return shift_up(w, n, params.S); }, same_runs},
                      opts.jobs);
      break;
    }
    case BijectionId::swap_top: {
      if (n < 2 || !params.S.within(1, n - 2)) throw ArgumentError("swap_top needs n >= 2 and S inside [n-2]");
      report.params = "n=" + std::to_string(n) + " S={" + params.S.str() + "}";
      const auto domain = gen_words({.family = Family::flat_s_insertion, .n = n, .insert = with(params.S, n - 1)}, opts);
      const auto codomain = gen_words({.family = Family::flat_s_insertion, .n = n, .insert = with(params.S, n)}, opts);
      check_map<Word>(report, domain, codomain,
                      {[&](const Word& w) { return swap_top(w, n, SwapDirection::n_minus_1_to_n); },
                       [&](const Word& w) { return swap_top(w, n, SwapDirection::n_to_n_minus_1); }, same_runs},
                      opts.jobs);
      break;
    }
    case BijectionId::two_run_shift: {
      const int l = params.l;
      if (l < 2 || l > n) throw ArgumentError("two_run_shift needs 2 <= l <= n");
      report.params = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      const auto domain =
          gen_words({.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset{l - 1}, .k = 2}, opts);
      const auto codomain =
          gen_words({.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset{l}, .k = 2}, opts);
      check_map<Word>(report, domain, codomain,
                      {[&](const Word& w) { return two_run_shift(w, n, l, ShiftDirection::up); },
                       [&](const Word& w) { return two_run_shift(w, n, l, ShiftDirection::down); }, same_runs},
                      opts.jobs);
      break;
    }
    case BijectionId::partition_to_flat: {
      if (n < 1) throw ArgumentError("partition_to_flat needs n >= 1");
      report.params = "n=" + std::to_string(n);
      const auto domain = gen_partitions({.family = Family::set_partitions, .n = n}, opts);
      const auto codomain = gen_words({.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset{1}}, opts);
      check_map<SetPartition>(report, domain, codomain,
                              {[](const SetPartition& p) { return partition_to_flat(p); },
                               [](const Word& w) { return flat_to_partition(w); }, runs_match_blocks},
                              opts.jobs);
      break;
    }
    case BijectionId::rpartition_to_flat: {
      const int r = params.r;
      if (n < 0 || r < 1) throw ArgumentError("rpartition_to_flat needs n >= 0 and r >= 1");
      report.params = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      const auto domain = gen_partitions({.family = Family::restricted_set_partitions, .n = n, .r = r}, opts);
      const auto codomain =
          gen_words({.family = Family::flat_s_insertion, .n = n + 1, .insert = InsertMultiset::ones(r)}, opts);
      check_map<SetPartition>(report, domain, codomain,
                              {[r](const SetPartition& p) { return rpartition_to_flat(p, r); },
                               [r](const Word& w) { return flat_to_rpartition(w, r); }, runs_match_blocks},
                              opts.jobs);
      break;
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const BijectionReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["params"] = report.params;
  j["domain_size"] = json_count(report.domain_size);
  j["codomain_size"] = json_count(report.codomain_size);
  j["image_in_codomain"] = report.image_in_codomain;
  j["injective"] = report.injective;
  j["surjective"] = report.surjective;
  j["inverse_composes"] = report.inverse_composes;
  j["statistic_preserved"] = report.statistic_preserved;
  j["passed"] = report.passed();
  j["counterexamples"] = report.counterexamples;
  return j;
}

}  // namespace flatpark
