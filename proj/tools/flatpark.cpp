// flatpark: tables, sweeps, enumeration and bijection checks from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 usage error, 3 enumeration ceiling hit.

#include "flatpark/bijections.hpp"
#include "flatpark/enumeration.hpp"
#include "flatpark/export.hpp"
#include "flatpark/recursions.hpp"
#include "flatpark/series.hpp"
#include "flatpark/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>

using namespace flatpark;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
  std::string out;
};

struct FamilyFlags {
  std::string family = "flat-pf";
  int n = 1;
  std::optional<std::string> S;
  std::optional<int> k;
  std::optional<int> r;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--jobs", c.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void add_family(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family,
                  "permutations, parking-functions, flat-pf, s-insertion, flat-s-insertion, set-partitions, "
                  "restricted-set-partitions");
  cmd->add_option("--n", f.n, "Size n")->required();
  cmd->add_option("--S", f.S, "Insertion multiset as a comma list, e.g. 2,2,3");
  cmd->add_option("--k", f.k, "Run count (words) or number of blocks of size >= 2 (partitions)");
  cmd->add_option("--r", f.r, "Number of separated elements for restricted partitions");
}

FamilySpec to_spec(const FamilyFlags& f) {
  FamilySpec spec{.family = parse_family(f.family), .n = f.n, .k = f.k, .r = f.r};
  if (f.S) spec.insert = InsertMultiset::parse(*f.S);
  return spec;
}

EnumerationOptions options(const Common& c) {
  auto opts = EnumerationOptions::from_environment();
  opts.jobs = c.jobs;
  return opts;
}

// Holds either stdout or the --out file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw ArgumentError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int print_results(const std::vector<CheckResult>& results, const Common& c) {
  Output out(c.out);
  bool ok = true;
  for (const auto& r : results) ok = ok && (r.passed || !r.gating);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) j["results"].push_back(to_json(r));
    j["passed"] = ok;
    out.stream() << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out.stream() << "id,status,checked,first_counterexample\n";
    for (const auto& r : results) {
      const auto j = to_json(r);
      out.stream() << r.id << ',' << j["status"].get<std::string>() << ',' << r.checked << ",\""
                   << (r.counterexamples.empty() ? "" : r.counterexamples.front()) << "\"\n";
    }
  } else {
    for (const auto& r : results) write_text(out.stream(), r);
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flattened parking functions: enumeration, counting and verification"};
  app.require_subcommand(1);

  Common common;
  FamilyFlags fam;
  SweepRange range;

  auto* t1 = app.add_subcommand("table1", "Flattened parking functions by number of runs");
  int t1_n_max = 8;
  t1->add_option("--n-max", t1_n_max, "Largest n")->check(CLI::PositiveNumber);
  add_common(t1, common);

  auto* t2 = app.add_subcommand("table2", "(r,k)-Bell numbers from partitions and from words");
  int t2_n_max = 5;
  int t2_r_max = 5;
  std::vector<int> t2_r;
  t2->add_option("--n-max", t2_n_max, "Largest row n")->check(CLI::PositiveNumber);
  t2->add_option("--r-max", t2_r_max, "Tables for r = 2..r-max")->check(CLI::PositiveNumber);
  t2->add_option("--r", t2_r, "Explicit list of r values")->delimiter(',');
  add_common(t2, common);

  auto* ver = app.add_subcommand("verify", "Check recursions, bijections or the generating function by brute force");
  std::vector<std::string> ids;
  ver->add_option("ids", ids, "Theorem ids; 'A vs B' adjudicates two recursions; 'all' runs every check; "
                              "'separation' prints the recursion-by-predicate matrix")
      ->required();
  ver->add_option("--n-max", range.n_max, "Largest n");
  ver->add_option("--r-max", range.r_max, "Largest r");
  ver->add_option("--k-max", range.k_max, "Largest run count");
  ver->add_option("--size-max", range.size_max, "Largest n + r, or word length for bijections");
  ver->add_option("--s-max", range.s_max, "Largest s for separation recursions");
  ver->add_option("--set-max", range.set_max, "Largest insertion multiset for shift_down and swap_top");
  add_common(ver, common);

  auto* en = app.add_subcommand("enumerate", "List family members in lexicographic order");
  add_family(en, fam);
  add_common(en, common);

  auto* cnt = app.add_subcommand("count", "Count family members, split by runs or large blocks");
  add_family(cnt, fam);
  add_common(cnt, common);

  auto* bij = app.add_subcommand("bijection", "Check a bijection exhaustively or apply it to one member");
  std::string bij_name;
  BijectionParams bp;
  std::string bij_S;
  std::optional<std::string> bij_input;
  bool bij_inverse = false;
  bij->add_option("name", bij_name, "shift_down, swap_top, two_run_shift, partition_to_flat, rpartition_to_flat")
      ->required();
  bij->add_option("--n", bp.n, "Size n")->required();
  bij->add_option("--S", bij_S, "Insertion multiset (shift_down, swap_top)");
  bij->add_option("--l", bp.l, "l for two_run_shift");
  bij->add_option("--r", bp.r, "r for rpartition_to_flat");
  bij->add_option("--input", bij_input, "Apply the map to this word or partition instead of checking it");
  bij->add_flag("--inverse", bij_inverse, "Apply the inverse map");
  add_common(bij, common);

  auto* gf = app.add_subcommand("gf", "Compare the closed generating function with brute-force coefficients");
  int gf_n_max = 7;
  int gf_k_max = 4;
  gf->add_option("--n-max", gf_n_max, "Largest power of y")->check(CLI::NonNegativeNumber);
  gf->add_option("--k-max", gf_k_max, "Largest power of x")->check(CLI::PositiveNumber);
  add_common(gf, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto format = parse_format(common.format);
    const auto opts = options(common);

    if (*t1) {
      const auto rows = table1(t1_n_max, opts);
      Output out(common.out);
      write_table1(out.stream(), rows, format);
      return 0;
    }

    if (*t2) {
      std::vector<int> r_set = t2_r;
      if (r_set.empty()) {
        for (int r = 2; r <= t2_r_max; ++r) r_set.push_back(r);
      }
      const auto blocks = table2(t2_n_max, r_set, opts);
      Output out(common.out);
      write_table2(out.stream(), blocks, format);
      for (const auto& b : blocks) {
        if (!b.agree()) return kExitFail;
      }
      return 0;
    }

    if (*ver) {
      RecursionEngine engine(opts);
      if (ids.size() == 3 && ids[1] == "vs") {
        const auto a = parse_recursion(ids[0]);
        const auto b = parse_recursion(ids[2]);
        if (!a || !b) throw ArgumentError("'vs' compares two recursion ids");
        const auto adj = adjudicate(*a, *b, range, engine);
        Output out(common.out);
        if (format == Format::json) {
          out.stream() << to_json(adj).dump(2) << '\n';
        } else {
          write_text(out.stream(), adj);
        }
        return adj.winner ? 0 : kExitFail;
      }
      if (ids.size() == 1 && ids[0] == "separation") {
        const auto matrix = separation_matrix(range, engine);
        Output out(common.out);
        if (format == Format::json) {
          out.stream() << to_json(matrix).dump(2) << '\n';
        } else {
          write_text(out.stream(), matrix);
        }
        return 0;
      }
      if (ids.size() == 1 && ids[0] == "all") ids = verifiable_ids();
      std::vector<CheckResult> results;
      for (const auto& id : ids) results.push_back(verify_theorem(id, range, opts, engine));
      return print_results(results, common);
    }

    if (*en) {
      const auto spec = to_spec(fam);
      validate(spec, opts);
      Output out(common.out);
      if (format == Format::text || format == Format::csv) {
        dump_members(out.stream(), spec, opts);
      } else {
        nlohmann::ordered_json j;
        j["family"] = family_name(spec.family);
        j["n"] = spec.n;
        auto& members = j["members"] = nlohmann::ordered_json::array();
        if (is_word_family(spec.family)) {
          for (const auto& w : gen_words(spec, opts)) members.push_back(w.str());
        } else {
          for (const auto& p : gen_partitions(spec, opts)) members.push_back(p.str());
        }
        out.stream() << j.dump(2) << '\n';
      }
      return 0;
    }

    if (*cnt) {
      const auto spec = to_spec(fam);
      validate(spec, opts);
      auto hist = statistic_histogram(spec, opts);
      if (spec.k) {
        const auto k = static_cast<std::size_t>(*spec.k);
        std::vector<Count> only(hist.size() > k ? hist.size() : k + 1, 0);
        if (k < hist.size()) only[k] = hist[k];
        hist = std::move(only);
      }
      Output out(common.out);
      write_histogram(out.stream(), spec, hist, format);
      return 0;
    }

    if (*bij) {
      const auto id = parse_bijection(bij_name);
      if (!id) throw ArgumentError("unknown bijection '" + bij_name + "'");
      bp.S = InsertMultiset::parse(bij_S);
      Output out(common.out);
      if (bij_input) {
        std::string result;
        switch (*id) {
          case BijectionId::shift_down: {
            const auto w = Word::parse(*bij_input);
            result = (bij_inverse ? shift_up(w, bp.n, bp.S) : shift_down(w, bp.n, bp.S)).str();
            break;
          }
          case BijectionId::swap_top:
            result = swap_top(Word::parse(*bij_input), bp.n,
                              bij_inverse ? SwapDirection::n_to_n_minus_1 : SwapDirection::n_minus_1_to_n)
                         .str();
            break;
          case BijectionId::two_run_shift:
            result = two_run_shift(Word::parse(*bij_input), bp.n, bp.l,
                                   bij_inverse ? ShiftDirection::down : ShiftDirection::up)
                         .str();
            break;
          case BijectionId::partition_to_flat:
            result = bij_inverse ? flat_to_partition(Word::parse(*bij_input)).str()
                                 : partition_to_flat(SetPartition::parse(*bij_input)).str();
            break;
          case BijectionId::rpartition_to_flat:
            result = bij_inverse ? flat_to_rpartition(Word::parse(*bij_input), bp.r).str()
                                 : rpartition_to_flat(SetPartition::parse(*bij_input), bp.r).str();
            break;
        }
        out.stream() << result << '\n';
        return 0;
      }
      const auto report = verify_bijection(*id, bp, opts);
      if (format == Format::json) {
        out.stream() << to_json(report).dump(2) << '\n';
      } else {
        const auto j = to_json(report);
        for (const auto& [key, value] : j.items()) {
          if (key == "counterexamples") continue;
          out.stream() << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        for (const auto& c : report.counterexamples) out.stream() << "counterexample: " << c << '\n';
      }
      return report.passed() ? 0 : kExitFail;
    }

    if (*gf) {
      const auto cmp = compare_gf(gf_n_max, gf_k_max);
      Output out(common.out);
      if (format == Format::json) {
        out.stream() << to_json(cmp).dump(2) << '\n';
      } else if (format == Format::csv) {
        out.stream() << "k,n,claimed,actual,equal\n";
        for (const auto& c : cmp.cells) {
          out.stream() << c.k << ',' << c.n << ',' << c.claimed << ',' << c.actual << ',' << (c.equal ? 1 : 0) << '\n';
        }
      } else {
        write_text(out.stream(), cmp);
      }
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCeiling;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
