// Acceptance run: one PASS/FAIL line per criterion, then the detail reports.
// Exit status is 1 when any gating criterion fails.

#include "flatpark/bijections.hpp"
#include "flatpark/enumeration.hpp"
#include "flatpark/export.hpp"
#include "flatpark/recursions.hpp"
#include "flatpark/sequences.hpp"
#include "flatpark/series.hpp"
#include "flatpark/verify.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace flatpark;

namespace {

struct Line {
  int number;
  std::string title;
  bool passed = true;
  bool gating = true;
  std::string detail;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::string str() const {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << ms / 1000 << '.' << (ms % 1000) / 100 << " s";
    return s.str();
  }
};

std::string first_counterexample(const CheckResult& r) {
  return r.counterexamples.empty() ? std::string("none recorded") : r.counterexamples.front();
}

Line table1_line(const EnumerationOptions& opts) {
  Line line{1, "Table 1 reproduction"};
  Stopwatch clock;
  const auto rows = table1(8, opts);
  int cells = 0, bad = 0;
  std::string example;
  for (const auto& e : fixtures::csv_rows("table1.csv")) {
    const auto& row = rows.at(static_cast<std::size_t>(e[0] - 1));
    std::vector<Count> got{row.total};
    for (std::size_t k = 0; k < 4; ++k) got.push_back(k < row.by_k.size() ? row.by_k[k] : Count(0));
    for (std::size_t i = 0; i < got.size(); ++i) {
      ++cells;
      if (got[i] != e[1 + i]) {
        ++bad;
        if (example.empty()) example = "n=" + std::to_string(e[0]) + " column " + std::to_string(i);
      }
    }
  }
  line.passed = bad == 0 && cells == 40;
  line.detail = std::to_string(cells - bad) + " of " + std::to_string(cells) + " cells match, n=8 total " +
                to_string(rows.back().total) + " (" + clock.str() + ", " + std::to_string(opts.jobs) + " jobs)";
  if (!example.empty()) line.detail += ", first mismatch at " + example;
  return line;
}

Line table2_line(const EnumerationOptions& opts) {
  Line line{2, "Table 2 reproduction (partitions and words)"};
  Stopwatch clock;
  const auto blocks = table2(5, {2, 3, 4, 5}, opts);
  int cells = 0, partitions_ok = 0, words_ok = 0, literal_ok = 0;
  for (const auto& e : fixtures::csv_rows("table2.csv")) {
    const auto& b = blocks.at(static_cast<std::size_t>(e[0] - 2));
    const auto n = static_cast<int>(e[1]);
    const auto k = static_cast<int>(e[2]);
    ++cells;
    partitions_ok += b.partitions.at(n - 1).at(k - 1) == e[3];
    words_ok += b.words.at(n - 1).at(k - 1) == e[3];
    literal_ok += count_Bkr(n, static_cast<int>(e[0]), k) == e[3];
  }
  line.passed = cells == 100 && partitions_ok == cells && words_ok == cells;
  line.detail = "cell (n,k) compared with B_{k-1}(n-1,r) and |flat_k(PF_n(1_r))|: partitions " +
                std::to_string(partitions_ok) + "/100, words " + std::to_string(words_ok) +
                "/100; unshifted count_Bkr(n,r,k) matches only " + std::to_string(literal_ok) + "/100 (" +
                clock.str() + ")";
  return line;
}

Line catalan_line(const EnumerationOptions& opts) {
  Line line{3, "Catalan column"};
  std::string values;
  for (int n = 1; n <= 8; ++n) {
    const Count c = count_family({.family = Family::flat_pf, .n = n, .k = 1}, opts);
    values += (values.empty() ? "" : ", ") + to_string(c);
    if (c != catalan(n)) {
      line.passed = false;
      line.detail = "n=" + std::to_string(n) + ": " + to_string(c) + " vs catalan " + to_string(catalan(n)) + "; ";
    }
  }
  line.detail += "k=1 counts for n=1..8: " + values;
  return line;
}

Line max_runs_line(const EnumerationOptions& opts) {
  Line line{4, "Max-run bound"};
  std::string tops;
  for (int n = 1; n <= 8; ++n) {
    const auto hist = statistic_histogram({.family = Family::flat_pf, .n = n}, opts);
    const std::size_t bound = static_cast<std::size_t>((n + 1) / 2);
    for (std::size_t k = bound + 1; k < hist.size(); ++k) {
      if (hist[k] != 0) {
        line.passed = false;
        line.detail += "n=" + std::to_string(n) + " has " + to_string(hist[k]) + " words with " + std::to_string(k) +
                       " runs; ";
      }
    }
    const Count at_bound = bound < hist.size() ? hist[bound] : Count(0);
    if (at_bound == 0) {
      line.passed = false;
      line.detail += "n=" + std::to_string(n) + " has none at ceil(n/2); ";
    }
    tops += (tops.empty() ? "" : ", ") + to_string(at_bound);
  }
  line.detail += "none above ceil(n/2); counts at ceil(n/2) for n=1..8: " + tops;
  return line;
}

Line recursions_line(RecursionEngine& engine, std::vector<std::string>& details) {
  Line line{5, "Recursion sweeps against brute force"};
  const std::vector<RecursionId> ids{
      RecursionId::flat_perm_sum,  RecursionId::flat_perm_two_term, RecursionId::flat_perm_third,
      RecursionId::ones_eq1,       RecursionId::ones_two_term,      RecursionId::ones_bell_form,
      RecursionId::r_ones_eq2,     RecursionId::r_ones_two_term,
  };
  std::string passed, failed;
  for (const auto id : ids) {
    const auto r = verify_recursion(id, {}, engine);
    std::ostringstream s;
    write_text(s, r);
    details.push_back(s.str());
    if (r.passed) {
      passed += (passed.empty() ? "" : " ") + r.id;
    } else {
      line.passed = false;
      failed += (failed.empty() ? "" : "; ") + r.id + " (" + r.notes.front() + ", e.g. " + first_counterexample(r) + ")";
    }
  }
  line.detail = "pass: " + passed;
  if (!failed.empty()) line.detail += "; fail: " + failed;
  const auto amended = verify_recursion(RecursionId::r_ones_eq2_amended, {}, engine);
  line.detail += std::string("; diagnostic r_ones_eq2_amended with C(n-1,m) in the second sum: ") +
                 (amended.passed ? "matches" : "fails") + " (" + amended.notes.front() + ")";
  return line;
}

Line peel_line(RecursionEngine& engine, std::vector<std::string>& details) {
  Line line{6, "Peel recursion adjudication"};
  const auto adj = adjudicate(RecursionId::r_ones_peel_statement, RecursionId::r_ones_peel_proof, {}, engine);
  std::ostringstream s;
  write_text(s, adj);
  details.push_back(s.str());
  line.passed = adj.winner.has_value();
  line.detail = adj.summary;
  return line;
}

Line bijections_line(const EnumerationOptions& opts, std::vector<std::string>& details) {
  Line line{7, "Bijection suites"};
  Stopwatch clock;
  for (const auto id : all_bijections()) {
    const auto r = verify_bijection_sweep(id, {}, opts);
    std::ostringstream s;
    write_text(s, r);
    details.push_back(s.str());
    line.detail += (line.detail.empty() ? "" : "; ") + r.id + ": " + r.notes.front();
    if (!r.passed) {
      line.passed = false;
      line.detail += ", fails at " + first_counterexample(r);
    }
  }
  line.detail += " (" + clock.str() + ")";
  return line;
}

Line identities_line() {
  Line line{8, "Identity sweep for 1_1 insertion"};
  int checks = 0;
  for (int n = 1; n <= 8; ++n) {
    const Count two_runs = (Count(1) << n) - n - 1;
    ++checks;
    if (f_ones(1, n, 2) != two_runs) {
      line.passed = false;
      line.detail += "f_ones(1," + std::to_string(n) + ",2) != 2^n-n-1; ";
    }
    Count sum = 0;
    for (int k = 1; k <= n + 1; ++k) {
      const Count f = f_ones(1, n, k);
      sum += f;
      ++checks;
      if (f != count_T(n, k - 1)) {
        line.passed = false;
        line.detail += "f_ones(1," + std::to_string(n) + "," + std::to_string(k) + ") != T; ";
      }
    }
    ++checks;
    if (sum != bell(n)) {
      line.passed = false;
      line.detail += "sum for n=" + std::to_string(n) + " != Bell; ";
    }
  }
  line.detail += std::to_string(checks) + " identities checked for n <= 8";
  return line;
}

Line two_run_line(RecursionEngine& engine, std::vector<std::string>& details) {
  Line line{9, "Two-run single-insert formula"};
  const auto r = verify_recursion(RecursionId::flat2_single_insert, {}, engine);
  std::ostringstream s;
  write_text(s, r);
  details.push_back(s.str());
  line.passed = r.passed;
  line.detail = r.notes.front() + (r.notes.size() > 1 ? "; " + r.notes.back() : "");
  if (!r.passed) line.detail += "; e.g. " + first_counterexample(r);
  return line;
}

Line gf_line(std::vector<std::string>& details) {
  Line line{10, "Generating-function verdict"};
  line.gating = false;
  const auto cmp = compare_gf(7, 4);
  std::ostringstream s;
  write_text(s, cmp);
  details.push_back(s.str());
  const auto corner = std::find_if(cmp.cells.begin(), cmp.cells.end(), [](const GfCell& c) { return c.k == 1 && c.n == 0; });
  const bool corner_ok = corner != cmp.cells.end() && corner->equal && corner->actual == 1;
  line.passed = corner_ok && cmp.cells.size() == 32;
  line.detail = "report only; (k=1,n=0) cell " + std::string(corner_ok ? "agrees at 1" : "disagrees") + "; " +
                cmp.verdict();
  return line;
}

Line separation_line(RecursionEngine& engine, std::vector<std::string>& details) {
  Line line{11, "Separation recursions by predicate"};
  const auto matrix = separation_matrix({}, engine);
  std::ostringstream s;
  write_text(s, matrix);
  details.push_back(s.str());
  std::string base, others;
  for (const auto& c : matrix) {
    if (!c.matches()) continue;
    const std::string pair = std::string(recursion_name(c.recursion)) + "~" + std::string(separation_name(c.predicate));
    if (c.recursion == RecursionId::sep_base) {
      base += (base.empty() ? "" : ", ") + std::string(separation_name(c.predicate));
    } else {
      others += (others.empty() ? "" : ", ") + pair;
    }
  }
  line.passed = !base.empty();
  line.detail = "sep_base matches " + (base.empty() ? std::string("no predicate") : base) + "; other matches: " +
                (others.empty() ? std::string("none") : others);
  return line;
}

}  // namespace

int main() {
  auto opts = EnumerationOptions::from_environment();
  opts.jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  RecursionEngine engine(opts);
  std::vector<std::string> details;

  std::vector<std::function<Line()>> criteria{
      [&] { return table1_line(opts); },
      [&] { return table2_line(opts); },
      [&] { return catalan_line(opts); },
      [&] { return max_runs_line(opts); },
      [&] { return recursions_line(engine, details); },
      [&] { return peel_line(engine, details); },
      [&] { return bijections_line(opts, details); },
      [&] { return identities_line(); },
      [&] { return two_run_line(engine, details); },
      [&] { return gf_line(details); },
      [&] { return separation_line(engine, details); },
  };

  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line{static_cast<int>(i + 1), "criterion"};
    try {
      line = criteria[i]();
    } catch (const std::exception& e) {
      line.passed = false;
      line.detail = std::string("error: ") + e.what();
    }
    if (line.gating && !line.passed) ok = false;
    std::cout << (line.passed ? "PASS" : "FAIL") << ' ' << line.number << ". " << line.title << ": " << line.detail
              << std::endl;
  }

  std::cout << "\n--- details ---\n";
  for (const auto& d : details) std::cout << d << '\n';
  std::cout << (ok ? "all gating criteria pass" : "some gating criteria fail") << '\n';
  return ok ? 0 : 1;
}
