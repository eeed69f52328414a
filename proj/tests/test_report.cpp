#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "tripow/report.hpp"

using namespace tripow;

TEST_CASE("count table rows") {
  const auto rows = count_table(1, 20);
  REQUIRE(rows.size() == 20);
  const CountRow& last = rows.back();
  CHECK(last.n == 20);
  CHECK(last.a == 1);
  CHECK(last.big_a == 7);
  CHECK(last.b == 1);
  CHECK(last.big_b == 7);
  CHECK(last.c == 0);
  CHECK(last.big_c == 0);
  CHECK(last.d == 0);
  CHECK(last.big_d == 0);

  // a range that does not start at 1 carries the right running totals
  const auto tail = count_table(19, 20);
  CHECK(tail[0].big_b == 6);
  CHECK(tail[1].big_b == 7);
  CHECK_THROWS_AS(count_table(0, 5), DomainError);
  CHECK_THROWS_AS(count_table(10, 5), DomainError);
}

TEST_CASE("csv output") {
  std::ostringstream out;
  write_count_csv(out, count_table(8, 10));
  CHECK(out.str() ==
        "n,a,A,b,B,c,C,d,D\n"
        "8,1,1,1,1,0,0,0,0\n"
        "9,0,1,0,1,0,0,0,0\n"
        "10,1,2,1,2,0,0,0,0\n");
}

TEST_CASE("json output parses back") {
  std::ostringstream out;
  write_count_json(out, count_table(58, 58));
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["schema"] == "tripow.table/1");
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["n"] == 58);
  CHECK(doc["rows"][0]["new_cube"] == 1);
  CHECK(doc["rows"][0]["distinct_cubes"] == 1);
  CHECK(doc["rows"][0]["cubes_ending"] == 1);
}

TEST_CASE("powers output") {
  const auto occ = alpha_power_positions(Rational(5, 2), 16);
  std::ostringstream csv;
  write_powers_csv(csv, occ);
  CHECK(csv.str() ==
        "end,root_length,exponent_num,exponent_den\n"
        "16,2,5,2\n");

  std::ostringstream json;
  write_powers_json(json, Rational(5, 2), occ);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["schema"] == "tripow.powers/1");
  CHECK(doc["alpha"] == "5/2");
  REQUIRE(doc["occurrences"].size() == 1);
  CHECK(doc["occurrences"][0]["end"] == 16);
  CHECK(doc["occurrences"][0]["root_length"] == 2);
  CHECK(doc["occurrences"][0]["exponent_num"] == 5);
  CHECK(doc["occurrences"][0]["exponent_den"] == 2);
}

TEST_CASE("writers are deterministic") {
  std::ostringstream first;
  std::ostringstream second;
  write_count_csv(first, count_table(1, 100));
  write_count_csv(second, count_table(1, 100));
  CHECK(first.str() == second.str());
}
