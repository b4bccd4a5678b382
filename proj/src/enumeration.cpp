#include "flatpark/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace flatpark {

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::permutations, "permutations"},
    {Family::parking_functions, "parking-functions"},
    {Family::flat_pf, "flat-pf"},
    {Family::s_insertion_pf, "s-insertion"},
    {Family::flat_s_insertion, "flat-s-insertion"},
    {Family::set_partitions, "set-partitions"},
    {Family::restricted_set_partitions, "restricted-set-partitions"},
};

bool uses_insertion(Family f) {
  return f == Family::s_insertion_pf || f == Family::flat_s_insertion;
}

bool free_letters(Family f) {
  return f == Family::parking_functions || f == Family::flat_pf;
}

// Depth-first search over words in lexicographic order. Prefixes that cannot
// be completed to a member are cut; every completed word is re-checked with
// the public predicates before it is reported.
class WordSearch {
 public:
  explicit WordSearch(const FamilySpec& spec)
      : family_(spec.family),
        n_(spec.n),
        length_(member_size(spec)),
        flattened_(is_flattened_family(spec.family)),
        free_(free_letters(spec.family)) {
    if (free_) {
      max_letter_ = n_;
      greater_.assign(static_cast<std::size_t>(n_) + 1, 0);
    } else {
      max_letter_ = n_;
      if (spec.insert) {
        for (Letter v : spec.insert->values()) max_letter_ = std::max(max_letter_, v);
      }
      remaining_.assign(static_cast<std::size_t>(max_letter_) + 1, 0);
      for (Letter v = 1; v <= n_; ++v) ++remaining_[v];
      if (spec.insert) {
        for (Letter v : spec.insert->values()) ++remaining_[v];
      }
    }
    buf_.reserve(length_);
    leads_.reserve(length_);
  }

  std::size_t length() const { return length_; }
  std::size_t depth() const { return buf_.size(); }
  std::span<const Letter> prefix() const { return buf_; }
  Letter max_letter() const { return max_letter_; }

  bool can_push(Letter v) const {
    if (free_) {
      for (Letter j = 1; j < v; ++j) {
        if (greater_[j] + 1 > n_ - j) return false;
      }
    } else if (remaining_[v] == 0) {
      return false;
    }
    if (flattened_ && !buf_.empty() && v < buf_.back() && v < leads_.back()) return false;
    return true;
  }

  void push(Letter v) {
    if (free_) {
      for (Letter j = 1; j < v; ++j) ++greater_[j];
    } else {
      --remaining_[v];
    }
    Letter lead = buf_.empty() ? v : leads_.back();
    if (!buf_.empty() && v < buf_.back()) lead = v;
    buf_.push_back(v);
    leads_.push_back(lead);
  }

  void pop() {
    Letter v = buf_.back();
    buf_.pop_back();
    leads_.pop_back();
    if (free_) {
      for (Letter j = 1; j < v; ++j) --greater_[j];
    } else {
      ++remaining_[v];
    }
  }

  template <class Visit>
  void search(Visit&& visit) {
    if (buf_.size() == length_) {
      if (accept()) visit(std::span<const Letter>(buf_));
      return;
    }
    for (Letter v = 1; v <= max_letter_; ++v) {
      if (!can_push(v)) continue;
      push(v);
      search(visit);
      pop();
    }
  }

 private:
  bool accept() const {
    switch (family_) {
      case Family::permutations:
        return true;
      case Family::parking_functions:
      case Family::s_insertion_pf:
        return is_parking_function(buf_, buf_.size());
      case Family::flat_pf:
      case Family::flat_s_insertion:
        return is_parking_function(buf_, buf_.size()) && is_flattened(buf_);
      default:
        return false;
    }
  }

  Family family_;
  int n_;
  std::size_t length_;
  bool flattened_;
  bool free_;
  Letter max_letter_ = 0;
  std::vector<Letter> buf_;
  std::vector<Letter> leads_;
  std::vector<int> greater_;
  std::vector<int> remaining_;
};

// Prefix classes of length min(2, L) in lexicographic order.
std::vector<std::vector<Letter>> prefix_classes(const FamilySpec& spec) {
  WordSearch ws(spec);
  const std::size_t depth = std::min<std::size_t>(2, ws.length());
  std::vector<std::vector<Letter>> out;
  auto rec = [&](auto&& self) -> void {
    if (ws.depth() == depth) {
      out.emplace_back(ws.prefix().begin(), ws.prefix().end());
      return;
    }
    for (Letter v = 1; v <= ws.max_letter(); ++v) {
      if (!ws.can_push(v)) continue;
      ws.push(v);
      self(self);
      ws.pop();
    }
  };
  rec(rec);
  return out;
}

// Runs work(i) for i in [0, count) on up to `jobs` threads. Results are
// written by the caller into slot i, so merge order is fixed by i.
void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

template <class PerClass>
void search_classes(const FamilySpec& spec, const EnumerationOptions& opts, PerClass&& per_class) {
  auto classes = prefix_classes(spec);
  run_parallel(classes.size(), opts.jobs, [&](std::size_t i) {
    WordSearch ws(spec);
    for (Letter v : classes[i]) ws.push(v);
    per_class(i, ws);
  });
}

void search_partitions(int size, int forced, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> rgs(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < forced && i < size; ++i) rgs[i] = i;
  auto rec = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == size) {
      visit(rgs);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[pos] = label;
      self(self, pos + 1, std::max(max_label, label));
    }
  };
  if (size == 0) {
    visit(rgs);
    return;
  }
  const int start = std::min(forced, size);
  rec(rec, start, start - 1);
}

std::size_t big_blocks_of_rgs(std::span<const int> rgs) {
  std::map<int, int> sizes;
  for (int label : rgs) ++sizes[label];
  return static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](const auto& kv) { return kv.second >= 2; }));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (e.name == name) return e.family;
  }
  std::string underscored(name);
  std::replace(underscored.begin(), underscored.end(), '_', '-');
  for (const auto& e : kFamilies) {
    if (e.name == underscored) return e.family;
  }
  throw ArgumentError("unknown family '" + std::string(name) + "'");
}

bool is_word_family(Family f) {
  return f != Family::set_partitions && f != Family::restricted_set_partitions;
}

bool is_flattened_family(Family f) {
  return f == Family::flat_pf || f == Family::flat_s_insertion;
}

EnumerationOptions EnumerationOptions::from_environment() {
  EnumerationOptions opts;
  if (const char* env = std::getenv("FLATPARK_CEILING")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value <= 0) {
      throw ArgumentError(std::string("FLATPARK_CEILING must be a positive integer, got '") +
                          env + "'");
    }
    opts.ceiling = static_cast<std::size_t>(value);
  }
  return opts;
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw ArgumentError("set partition has an empty block");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::sort(seen.begin(), seen.end());
  bool ok = static_cast<int>(seen.size()) == n;
  for (std::size_t i = 0; ok && i < seen.size(); ++i) ok = seen[i] == static_cast<int>(i) + 1;
  if (!ok) throw ArgumentError("blocks do not partition [" + std::to_string(n) + "]");
}

SetPartition SetPartition::from_rgs(std::span<const int> rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const auto label = static_cast<std::size_t>(rgs[i]);
    if (label > blocks.size()) throw ArgumentError("not a restricted growth string");
    if (label == blocks.size()) blocks.emplace_back();
    blocks[label].push_back(static_cast<int>(i) + 1);
  }
  SetPartition p;
  p.n_ = static_cast<int>(rgs.size());
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    if (slash == std::string_view::npos) slash = text.size();
    Word block = Word::parse(text.substr(start, slash - start));
    if (block.empty()) throw ArgumentError("empty block in '" + std::string(text) + "'");
    blocks.emplace_back(block.begin(), block.end());
    n += static_cast<int>(block.size());
    start = slash + 1;
  }
  return SetPartition(n, std::move(blocks));
}

std::size_t SetPartition::big_block_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() >= 2; }));
}

bool SetPartition::separates_first(int r) const noexcept {
  for (const auto& b : blocks_) {
    if (std::count_if(b.begin(), b.end(), [&](int x) { return x <= r; }) > 1) return false;
  }
  return true;
}

std::string SetPartition::str() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out.push_back('/');
    out += Word(std::vector<Letter>(blocks_[i].begin(), blocks_[i].end())).str();
  }
  return out;
}

std::size_t member_size(const FamilySpec& spec) {
  const std::size_t n = static_cast<std::size_t>(std::max(spec.n, 0));
  if (spec.family == Family::restricted_set_partitions) {
    return n + static_cast<std::size_t>(std::max(spec.r.value_or(0), 0));
  }
  return n + (spec.insert ? spec.insert->size() : 0);
}

void validate(const FamilySpec& spec, const EnumerationOptions& opts) {
  const std::string fam(family_name(spec.family));
  const bool partitions = !is_word_family(spec.family);
  if (spec.n < (partitions ? 0 : 1)) {
    throw ArgumentError(fam + ": n must be " + (partitions ? "nonnegative" : "positive"));
  }
  if (uses_insertion(spec.family)) {
    if (!spec.insert) throw ArgumentError(fam + ": the insertion multiset S is required");
    if (!spec.insert->within(1, spec.n + 1)) {
      throw ArgumentError(fam + ": S must have values in [1, n+1] = [1, " +
                          std::to_string(spec.n + 1) + "]");
    }
  } else if (spec.insert) {
    throw ArgumentError(fam + ": family takes no insertion multiset");
  }
  if (spec.family == Family::restricted_set_partitions) {
    if (!spec.r || *spec.r < 1) throw ArgumentError(fam + ": restriction r >= 1 is required");
  } else if (spec.r) {
    throw ArgumentError(fam + ": family takes no restriction r");
  }
  if (spec.k) {
    if (*spec.k < 0) throw ArgumentError(fam + ": k must be nonnegative");
    if (is_flattened_family(spec.family)) {
      const std::size_t bound = max_runs_bound(member_size(spec));
      if (*spec.k < 1 || static_cast<std::size_t>(*spec.k) > bound) {
        throw ArgumentError(fam + ": run filter k must lie in [1, " + std::to_string(bound) + "]");
      }
    }
  }
  const std::size_t size = member_size(spec);
  if (size > opts.ceiling) {
    throw ResourceError(fam + ": member size " + std::to_string(size) +
                        " exceeds the enumeration ceiling " + std::to_string(opts.ceiling) +
                        " (raise FLATPARK_CEILING)");
  }
}

void for_each_word(const FamilySpec& spec,
                   const std::function<void(std::span<const Letter>)>& visit,
                   const EnumerationOptions& opts) {
  validate(spec, opts);
  if (!is_word_family(spec.family)) throw ArgumentError("for_each_word: not a word family");
  WordSearch ws(spec);
  if (spec.k) {
    const auto k = static_cast<std::size_t>(*spec.k);
    ws.search([&](std::span<const Letter> w) {
      if (run_count(w) == k) visit(w);
    });
  } else {
    ws.search(visit);
  }
}

void for_each_partition(const FamilySpec& spec,
                        const std::function<void(const SetPartition&)>& visit,
                        const EnumerationOptions& opts) {
  validate(spec, opts);
  if (is_word_family(spec.family)) throw ArgumentError("for_each_partition: not a partition family");
  const int forced = spec.family == Family::restricted_set_partitions ? *spec.r : 0;
  search_partitions(static_cast<int>(member_size(spec)), forced, [&](std::span<const int> rgs) {
    if (spec.k && big_blocks_of_rgs(rgs) != static_cast<std::size_t>(*spec.k)) return;
    visit(SetPartition::from_rgs(rgs));
  });
}

std::vector<Word> gen_words(const FamilySpec& spec, const EnumerationOptions& opts) {
  validate(spec, opts);
  if (!is_word_family(spec.family)) throw ArgumentError("gen_words: not a word family");
  const std::optional<std::size_t> k =
      spec.k ? std::optional<std::size_t>(static_cast<std::size_t>(*spec.k)) : std::nullopt;
  std::vector<std::vector<Word>> slots;
  slots.resize(prefix_classes(spec).size());
  search_classes(spec, opts, [&](std::size_t i, WordSearch& ws) {
    ws.search([&](std::span<const Letter> w) {
      if (!k || run_count(w) == *k) slots[i].emplace_back(w);
    });
  });
  std::vector<Word> out;
  for (auto& slot : slots) {
    out.insert(out.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
  }
  return out;
}

std::vector<SetPartition> gen_partitions(const FamilySpec& spec, const EnumerationOptions& opts) {
  std::vector<SetPartition> out;
  for_each_partition(spec, [&](const SetPartition& p) { out.push_back(p); }, opts);
  return out;
}

std::vector<Count> statistic_histogram(const FamilySpec& spec, const EnumerationOptions& opts) {
  FamilySpec unfiltered = spec;
  unfiltered.k.reset();
  validate(unfiltered, opts);
  std::vector<std::uint64_t> total;
  auto bump = [](std::vector<std::uint64_t>& h, std::size_t stat) {
    if (h.size() <= stat) h.resize(stat + 1, 0);
    ++h[stat];
  };
  if (is_word_family(spec.family)) {
    std::vector<std::vector<std::uint64_t>> slots(prefix_classes(unfiltered).size());
    search_classes(unfiltered, opts, [&](std::size_t i, WordSearch& ws) {
      ws.search([&](std::span<const Letter> w) { bump(slots[i], run_count(w)); });
    });
    for (const auto& slot : slots) {
      if (total.size() < slot.size()) total.resize(slot.size(), 0);
      for (std::size_t j = 0; j < slot.size(); ++j) total[j] += slot[j];
    }
  } else {
    const int forced = spec.family == Family::restricted_set_partitions ? *spec.r : 0;
    search_partitions(static_cast<int>(member_size(unfiltered)), forced,
                      [&](std::span<const int> rgs) { bump(total, big_blocks_of_rgs(rgs)); });
  }
  return std::vector<Count>(total.begin(), total.end());
}

Count count_family(const FamilySpec& spec, const EnumerationOptions& opts) {
  validate(spec, opts);
  const auto hist = statistic_histogram(spec, opts);
  if (spec.k) {
    const auto k = static_cast<std::size_t>(*spec.k);
    return k < hist.size() ? hist[k] : Count(0);
  }
  Count total = 0;
  for (const auto& c : hist) total += c;
  return total;
}

void dump_members(std::ostream& out, const FamilySpec& spec, const EnumerationOptions& opts) {
  if (is_word_family(spec.family)) {
    if (opts.jobs > 1) {
      for (const auto& w : gen_words(spec, opts)) out << w.str() << '\n';
    } else {
      for_each_word(spec, [&](std::span<const Letter> w) { out << Word(w).str() << '\n'; }, opts);
    }
  } else {
    for_each_partition(spec, [&](const SetPartition& p) { out << p.str() << '\n'; }, opts);
  }
}

Count count_T(int n, int k) {
  if (n < 1 || k < 0) throw ArgumentError("count_T needs n >= 1 and k >= 0");
  return count_family({.family = Family::set_partitions, .n = n, .k = k});
}

Count count_Bkr(int n, int r, int k) {
  if (n < 0 || r < 1 || k < 0) throw ArgumentError("count_Bkr needs n >= 0, r >= 1 and k >= 0");
  return count_family({.family = Family::restricted_set_partitions, .n = n, .k = k, .r = r});
}

std::string_view separation_name(Separation mode) {
  switch (mode) {
    case Separation::ones_same_run:
      return "ones_same_run";
    case Separation::ones_separate_runs:
      return "ones_separate_runs";
    case Separation::ones_any_composition:
      return "ones_any_composition";
  }
  return "unknown";
}

Separation parse_separation(std::string_view name) {
  for (auto mode : {Separation::ones_same_run, Separation::ones_separate_runs,
                    Separation::ones_any_composition}) {
    if (separation_name(mode) == name) return mode;
  }
  throw ArgumentError("unknown separation mode '" + std::string(name) + "'");
}

bool satisfies_separation(std::span<const Letter> w, int s, Separation mode) {
  std::vector<std::size_t> run_of(w.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && w[i - 1] > w[i]) ++run;
    run_of[i] = run;
  }
  std::set<std::size_t> ones_runs;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      ones_runs.insert(run_of[i]);
      ++ones;
    }
  }
  if (mode == Separation::ones_same_run && ones_runs.size() != 1) return false;
  if (mode == Separation::ones_separate_runs && ones_runs.size() != ones) return false;

  std::set<std::size_t> taken = ones_runs;
  for (Letter v = 2; v <= s; ++v) {
    std::set<std::size_t> runs_of_v;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == v) runs_of_v.insert(run_of[i]);
    }
    if (runs_of_v.empty()) return false;
    for (std::size_t rv : runs_of_v) {
      if (!taken.insert(rv).second) return false;
    }
  }
  return true;
}

Count count_separated(int s, int r, int m, int k, Separation mode, const EnumerationOptions& opts) {
  if (s < 1 || r < 0 || m < 1 || k < 1) {
    throw ArgumentError("count_separated needs s >= 1, r >= 0, m >= 1, k >= 1");
  }
  FamilySpec spec{.family = Family::flat_s_insertion, .n = m, .insert = InsertMultiset::ones(r)};
  validate(spec, opts);
  std::uint64_t total = 0;
  for_each_word(spec, [&](std::span<const Letter> w) {
    if (run_count(w) == static_cast<std::size_t>(k) && satisfies_separation(w, s, mode)) ++total;
  }, opts);
  return Count(total);
}

}  // namespace flatpark
