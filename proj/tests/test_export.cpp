#include "flatpark/export.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>

using namespace flatpark;

TEST_CASE("table1 matches the published counts") {
  const auto rows = table1(8);
  REQUIRE(rows.size() == 8);
  const auto expected = fixtures::csv_rows("table1.csv");
  REQUIRE(expected.size() == 8);
  for (const auto& e : expected) {
    const auto& row = rows.at(static_cast<std::size_t>(e[0] - 1));
    CAPTURE(e[0]);
    CHECK(row.n == e[0]);
    CHECK(row.total == e[1]);
    REQUIRE(row.by_k.size() >= 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(row.by_k[k] == e[2 + k]);
    Count sum = 0;
    for (const auto& c : row.by_k) sum += c;
    CHECK(sum == row.total);
  }
}

TEST_CASE("table1 widens past four run columns") {
  const auto rows = table1(10);
  CHECK(rows.back().by_k.size() == 5);
  CHECK(rows.back().by_k[4] != 0);
}

TEST_CASE("table2 matches the published cells") {
  const auto blocks = table2(5, {2, 3, 4, 5});
  REQUIRE(blocks.size() == 4);
  for (const auto& b : blocks) CHECK(b.agree());
  const auto expected = fixtures::csv_rows("table2.csv");
  REQUIRE(expected.size() == 100);
  for (const auto& e : expected) {
    const auto& b = blocks.at(static_cast<std::size_t>(e[0] - 2));
    CAPTURE(e[0]);
    CAPTURE(e[1]);
    CAPTURE(e[2]);
    REQUIRE(b.r == e[0]);
    const auto n = static_cast<std::size_t>(e[1] - 1);
    const auto k = static_cast<std::size_t>(e[2] - 1);
    CHECK(b.words.at(n).at(k) == e[3]);
    CHECK(b.partitions.at(n).at(k) == e[3]);
  }
}

TEST_CASE("table1 formats") {
  const auto rows = table1(4);
  std::ostringstream csv;
  write_table1(csv, rows, Format::csv);
  CHECK(csv.str() ==
        "n,total,k1,k2,k3,k4\n"
        "1,1,1,0,0,0\n"
        "2,2,2,0,0,0\n"
        "3,8,5,3,0,0\n"
        "4,46,14,32,0,0\n");

  std::ostringstream a, b;
  write_table1(a, rows, Format::json);
  write_table1(b, table1(4), Format::json);
  CHECK(a.str() == b.str());
  const auto j = nlohmann::json::parse(a.str());
  CHECK(j["n"]["4"]["total"] == 46);
  CHECK(j["n"]["4"]["k"]["2"] == 32);
}

TEST_CASE("table2 csv and json") {
  const auto blocks = table2(3, {2});
  std::ostringstream csv;
  write_table2(csv, blocks, Format::csv);
  CHECK(csv.str().rfind("r,n,k,partitions,words\n", 0) == 0);
  CHECK(csv.str().find("2,3,2,7,7\n") != std::string::npos);

  std::ostringstream js;
  write_table2(js, blocks, Format::json);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["r"]["2"]["n"]["3"]["3"]["words"] == 2);
}

TEST_CASE("json counts switch to strings past int64") {
  CHECK(json_count(Count(42)).is_number_integer());
  Count big = 1;
  for (int i = 0; i < 70; ++i) big *= 2;
  const auto j = json_count(big);
  REQUIRE(j.is_string());
  CHECK(j.get<std::string>() == "1180591620717411303424");
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), ArgumentError);
}

TEST_CASE("table bounds are validated") {
  CHECK_THROWS_AS(table1(0), ArgumentError);
  EnumerationOptions tight;
  tight.ceiling = 5;
  CHECK_THROWS_AS(table1(8, tight), ResourceError);
}
