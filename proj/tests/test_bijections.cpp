#include "flatpark/bijections.hpp"

#include <doctest.h>

using namespace flatpark;

TEST_CASE("shift down and back") {
  CHECK(shift_down(Word::parse("1223"), 3, {2}) == Word::parse("1112"));
  CHECK(shift_down(Word::parse("1232"), 3, {2}) == Word::parse("1121"));
  CHECK(shift_up(Word::parse("1121"), 3, {2}) == Word::parse("1232"));
  CHECK(shift_down(Word::parse("12344"), 4, {4}) == Word::parse("11233"));
  CHECK_THROWS_AS(shift_down(Word::parse("1322"), 3, {3}), DomainError);
  CHECK_THROWS_AS(shift_down(Word::parse("1123"), 3, {1}), ArgumentError);
}

TEST_CASE("swap top touches one letter") {
  // n = 5, S = {2}: 4 appears twice, 5 once
  const Word a = Word::parse("1244523");
  const Word b = swap_top(a, 5, SwapDirection::n_minus_1_to_n);
  CHECK(b == Word::parse("1245523"));
  CHECK(swap_top(b, 5, SwapDirection::n_to_n_minus_1) == a);
  CHECK(swap_top(Word::parse("13423"), 4, SwapDirection::n_minus_1_to_n) == Word::parse("14423"));
  CHECK_THROWS_AS(swap_top(Word::parse("1234"), 4, SwapDirection::n_minus_1_to_n), DomainError);
}

TEST_CASE("two run shift") {
  CHECK(two_run_shift(Word::parse("12324"), 4, 3, ShiftDirection::up) == Word::parse("13324"));
  CHECK(two_run_shift(Word::parse("13324"), 4, 3, ShiftDirection::down) == Word::parse("12324"));
  // three runs are rejected; unrestricted the map would give 14332, which is not flattened
  CHECK_THROWS_AS(two_run_shift(Word::parse("14232"), 4, 3, ShiftDirection::up), DomainError);
  CHECK_THROWS_AS(two_run_shift(Word::parse("1322"), 3, 4, ShiftDirection::up), ArgumentError);
}

TEST_CASE("partition maps") {
  CHECK(partition_to_flat(SetPartition::parse("1/23")) == Word::parse("1132"));
  CHECK(partition_to_flat(SetPartition::parse("1/2/3/4")) == Word::parse("11234"));
  CHECK(flat_to_partition(Word::parse("1132")) == SetPartition::parse("1/23"));
  CHECK(flat_to_partition(Word::parse("1231")) == SetPartition::parse("123"));
  CHECK_THROWS_AS(flat_to_partition(Word::parse("1321")), DomainError);

  CHECK(rpartition_to_flat(SetPartition::parse("13/24"), 2) == Word::parse("12131"));
  CHECK(flat_to_rpartition(Word::parse("12131"), 2) == SetPartition::parse("13/24"));
  CHECK(rpartition_to_flat(SetPartition::parse("1/2/3/4/5"), 3) == Word::parse("111123"));
  CHECK_THROWS_AS(rpartition_to_flat(SetPartition::parse("12/34"), 2), DomainError);
}

TEST_CASE("exhaustive reports") {
  auto sd = verify_bijection(BijectionId::shift_down, {.n = 3, .S = {2}});
  CHECK(sd.passed());
  CHECK(sd.domain_size == 3);

  auto rp = verify_bijection(BijectionId::rpartition_to_flat, {.n = 2, .r = 2});
  CHECK(rp.passed());
  CHECK(rp.domain_size == 10);

  auto tr = verify_bijection(BijectionId::two_run_shift, {.n = 5, .l = 3});
  CHECK(tr.passed());
  CHECK(tr.domain_size == 18);

  auto pf = verify_bijection(BijectionId::partition_to_flat, {.n = 6}, {.jobs = 3});
  CHECK(pf.passed());
  CHECK(pf.domain_size == 203);

  CHECK(verify_bijection(BijectionId::swap_top, {.n = 4, .S = {2}}).passed());
  CHECK(verify_bijection(BijectionId::swap_top, {.n = 5, .S = {1, 3}}, {.jobs = 2}).passed());
}

TEST_CASE("two run shift has no bijection at l = 2") {
  for (int n = 3; n <= 6; ++n) {
    auto report = verify_bijection(BijectionId::two_run_shift, {.n = n, .l = 2});
    CHECK_FALSE(report.passed());
    CHECK(report.domain_size != report.codomain_size);
    CHECK_FALSE(report.counterexamples.empty());
  }
}

TEST_CASE("report json") {
  auto j = to_json(verify_bijection(BijectionId::two_run_shift, {.n = 3, .l = 2}));
  CHECK(j["name"] == "two_run_shift");
  CHECK(j["domain_size"] == 4);
  CHECK(j["codomain_size"] == 2);
  CHECK(j["passed"] == false);
  CHECK(j.begin().key() == "name");
}
