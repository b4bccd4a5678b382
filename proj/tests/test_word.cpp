#include "flatpark/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace flatpark;

TEST_CASE("parking function predicate") {
  CHECK(is_parking_function(Word::parse("112233456"), 9));
  CHECK(is_parking_function(Word::parse("111111119"), 9));
  CHECK(is_parking_function(Word::parse("7654321"), 7));
  for (int n = 2; n <= 6; ++n) {
    Word all_n(std::vector<Letter>(static_cast<std::size_t>(n), n));
    CHECK_FALSE(is_parking_function(all_n, static_cast<std::size_t>(n)));
  }
  CHECK_THROWS_AS(is_parking_function(Word::parse("112"), 4), ArgumentError);
  CHECK_THROWS_AS(is_parking_function(Word{}, 0), ArgumentError);
}

TEST_CASE("run decomposition") {
  auto d = run_decomposition(Word::parse("14224222"));
  REQUIRE(d.count() == 3);
  CHECK(d.runs[0] == Word::parse("14"));
  CHECK(d.runs[1] == Word::parse("224"));
  CHECK(d.runs[2] == Word::parse("222"));
  CHECK(d.leading_values == std::vector<Letter>{1, 2, 2});

  auto e = run_decomposition(Word::parse("1423"));
  REQUIRE(e.count() == 2);
  CHECK(e.runs[0] == Word::parse("14"));
  CHECK(e.runs[1] == Word::parse("23"));

  CHECK(run_decomposition(Word::parse("123456789")).count() == 1);
  CHECK_THROWS_AS(run_decomposition(Word{}), ArgumentError);
}

TEST_CASE("flattened predicate") {
  CHECK_FALSE(is_flattened(Word::parse("7654321")));
  CHECK(is_flattened(Word::parse("1423")));
  CHECK_FALSE(is_flattened(Word::parse("14332")));
  CHECK(is_flattened(Word::parse("14224222")));
  CHECK(is_flattened(Word::parse("112233456")));
  CHECK_THROWS_AS(is_flattened(Word{}), ArgumentError);
}

TEST_CASE("max runs bound") {
  CHECK(max_runs_bound(7) == 4);
  CHECK(max_runs_bound(1) == 1);
  CHECK(max_runs_bound(8) == 4);
  CHECK_THROWS_AS(max_runs_bound(0), ArgumentError);
}

TEST_CASE("text forms") {
  CHECK(Word::parse("14232").str() == "14232");
  Word wide{1, 10, 3};
  CHECK(wide.str() == "1,10,3");
  CHECK(Word::parse("1,10,3") == wide);
  CHECK(Word::parse("1,2,3") == Word::parse("123"));
  CHECK_THROWS_AS(Word::parse("12a"), ArgumentError);
  CHECK_THROWS_AS(Word::parse("1,,2"), ArgumentError);

  auto s = InsertMultiset::parse("3,1,1");
  CHECK(s.str() == "1,1,3");
  CHECK(s.multiplicity(1) == 2);
  CHECK(InsertMultiset::ones(3) == InsertMultiset{1, 1, 1});
  CHECK(InsertMultiset::parse("").empty());
}

TEST_CASE("word invariants on random words") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Letter> letters(static_cast<std::size_t>(n));
    for (auto& a : letters) a = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    Word w(letters);

    auto d = run_decomposition(w);
    std::vector<Letter> joined;
    for (const auto& run : d.runs) {
      CHECK(std::is_sorted(run.begin(), run.end()));
      joined.insert(joined.end(), run.begin(), run.end());
    }
    CHECK(Word(joined) == w);
    for (std::size_t j = 0; j + 1 < d.runs.size(); ++j) {
      CHECK(d.runs[j][d.runs[j].size() - 1] > d.runs[j + 1][0]);
    }
    CHECK(d.count() == run_count(w));

    auto shuffled = letters;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(is_parking_function(w, w.size()) == is_parking_function(Word(shuffled), w.size()));

    if (is_flattened(w)) CHECK(w[0] == *std::min_element(w.begin(), w.end()));
  }
}

TEST_CASE("weak and strict runs agree on permutations") {
  std::vector<Letter> p{1, 2, 3, 4, 5, 6};
  do {
    std::size_t strict = 1;
    for (std::size_t i = 1; i < p.size(); ++i) strict += p[i - 1] > p[i] ? 1 : 0;
    CHECK(run_count(Word(p)) == strict);
  } while (std::next_permutation(p.begin(), p.end()));
}
