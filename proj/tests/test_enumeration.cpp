#include "flatpark/enumeration.hpp"
#include "flatpark/sequences.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

using namespace flatpark;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("table 1 from brute force") {
  for (const auto& row : fixtures::csv_rows("table1.csv")) {
    const int n = static_cast<int>(row[0]);
    CAPTURE(n);
    const auto hist = statistic_histogram({.family = Family::flat_pf, .n = n});
    Count total = 0;
    for (const auto& c : hist) total += c;
    CHECK(total == row[1]);
    for (int k = 1; k <= 4; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      CHECK((idx < hist.size() ? hist[idx] : Count(0)) == row[1 + k]);
    }
  }
}

TEST_CASE("small families list exactly") {
  CHECK(strings(gen_words({.family = Family::flat_s_insertion, .n = 3, .insert = InsertMultiset{2}})) ==
        std::vector<std::string>{"1223", "1232", "1322"});
  CHECK(strings(gen_words({.family = Family::flat_pf, .n = 2})) == std::vector<std::string>{"11", "12"});
  CHECK(strings(gen_words({.family = Family::flat_pf, .n = 3, .k = 2})) ==
        std::vector<std::string>{"121", "131", "132"});
  CHECK(strings(gen_words({.family = Family::permutations, .n = 3})) ==
        std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
}

TEST_CASE("family sizes") {
  CHECK(count_family({.family = Family::parking_functions, .n = 5}) == 1296);
  CHECK(count_family({.family = Family::permutations, .n = 6}) == 720);
  CHECK(count_family({.family = Family::set_partitions, .n = 7}) == bell(7));
  // arrangements of the multiset [n] + S
  CHECK(count_family({.family = Family::s_insertion_pf, .n = 4, .insert = InsertMultiset{1, 1}}) == 120);
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_family({.family = Family::flat_pf, .n = n, .k = 1}) == catalan(n));
  }
}

TEST_CASE("max runs bound is sharp") {
  for (int n = 1; n <= 8; ++n) {
    const auto hist = statistic_histogram({.family = Family::flat_pf, .n = n});
    const auto bound = static_cast<std::size_t>(max_runs_bound(static_cast<std::size_t>(n)));
    CHECK(hist.size() == bound + 1);
    CHECK(hist[bound] > 0);
  }
}

TEST_CASE("parallel enumeration matches serial order") {
  const FamilySpec spec{.family = Family::flat_s_insertion, .n = 6, .insert = InsertMultiset{1, 3}};
  const auto serial = gen_words(spec);
  const auto parallel = gen_words(spec, {.jobs = 4});
  CHECK(serial == parallel);
  CHECK(std::is_sorted(serial.begin(), serial.end()));
  CHECK(std::set<Word>(serial.begin(), serial.end()).size() == serial.size());
}

TEST_CASE("set partitions") {
  const auto parts = gen_partitions({.family = Family::set_partitions, .n = 3});
  std::vector<std::string> text;
  for (const auto& p : parts) text.push_back(p.str());
  CHECK(text == std::vector<std::string>{"123", "12/3", "13/2", "1/23", "1/2/3"});
  CHECK(SetPartition::parse("13/2").big_block_count() == 1);
  CHECK(SetPartition::parse("1/2/34").separates_first(3));
  CHECK_FALSE(SetPartition::parse("12/34").separates_first(2));
  CHECK_THROWS_AS(SetPartition::parse("12/24"), ArgumentError);

  CHECK(count_T(4, 0) == 1);
  CHECK(count_T(4, 1) == 11);
  CHECK(count_T(4, 2) == 3);
  CHECK(count_T(5, 2) == 25);
  for (int n = 1; n <= 7; ++n) {
    Count total = 0;
    for (int k = 0; k <= n; ++k) total += count_T(n, k);
    CHECK(total == bell(n));
  }
}

TEST_CASE("r-Bell partitions at the definition's indices") {
  CHECK(count_Bkr(2, 2, 1) == 7);
  CHECK(count_Bkr(4, 4, 2) == 391);
  CHECK(count_Bkr(3, 2, 2) == 18);
  CHECK(count_Bkr(0, 3, 0) == 1);
  CHECK(r_bell(2, 2) == 10);
  CHECK(r_bell(4, 5) == 1540);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate({.family = Family::s_insertion_pf, .n = 3}), ArgumentError);
  CHECK_THROWS_AS(validate({.family = Family::flat_s_insertion, .n = 3, .insert = InsertMultiset{5}}),
                  ArgumentError);
  CHECK_THROWS_AS(validate({.family = Family::flat_pf, .n = 4, .k = 3}), ArgumentError);
  CHECK_THROWS_AS(validate({.family = Family::restricted_set_partitions, .n = 3}), ArgumentError);
  CHECK_THROWS_AS(validate({.family = Family::flat_pf, .n = 13}), ResourceError);
  CHECK_NOTHROW(validate({.family = Family::flat_pf, .n = 13}, {.ceiling = 13}));
  CHECK(parse_family("flat_s_insertion") == Family::flat_s_insertion);
  CHECK_THROWS_AS(parse_family("flat"), ArgumentError);
}

TEST_CASE("dump format") {
  std::ostringstream out;
  dump_members(out, {.family = Family::flat_pf, .n = 3, .k = 2});
  CHECK(out.str() == "121\n131\n132\n");
}

TEST_CASE("separation predicates") {
  CHECK(satisfies_separation(Word::parse("1123").letters(), 1, Separation::ones_same_run));
  CHECK(satisfies_separation(Word::parse("11324").letters(), 2, Separation::ones_same_run));
  CHECK_FALSE(satisfies_separation(Word::parse("11234").letters(), 2, Separation::ones_same_run));
  CHECK(satisfies_separation(Word::parse("13124").letters(), 1, Separation::ones_separate_runs));
  CHECK_FALSE(satisfies_separation(Word::parse("11324").letters(), 1, Separation::ones_separate_runs));
  CHECK(satisfies_separation(Word::parse("1132").letters(), 2, Separation::ones_any_composition));
  CHECK_FALSE(satisfies_separation(Word::parse("12").letters(), 2, Separation::ones_any_composition));
}
