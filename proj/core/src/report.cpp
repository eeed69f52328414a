#include "tripow/report.hpp"

#include <ostream>

#include <json.hpp>

#include "tripow/cubes.hpp"
#include "tripow/squares.hpp"

namespace tripow {

std::vector<CountRow> count_table(std::int64_t from, std::int64_t to) {
  if (from < 1) throw DomainError("count_table: from must be >= 1");
  if (to < from) throw DomainError("count_table: to must be >= from");
  const DiffVector squares = square_diff_vector(to);
  const DiffVector cubes = cube_diff_vector(to);
  std::vector<CountRow> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  std::int64_t big_b = squares.prefix_sum(from - 1);
  std::int64_t big_d = cubes.prefix_sum(from - 1);
  for (std::int64_t n = from; n <= to; ++n) {
    CountRow row;
    row.n = n;
    row.a = distinct_square_delta(n);
    row.big_a = distinct_square_count(n);
    row.b = squares.delta(n);
    big_b += row.b;
    row.big_b = big_b;
    row.c = distinct_cube_delta(n);
    row.big_c = distinct_cube_count(n);
    row.d = cubes.delta(n);
    big_d += row.d;
    row.big_d = big_d;
    rows.push_back(row);
  }
  return rows;
}

void write_count_csv(std::ostream& out, const std::vector<CountRow>& rows) {
  out << "n,a,A,b,B,c,C,d,D\n";
  for (const CountRow& r : rows) {
    out << r.n << ',' << r.a << ',' << r.big_a << ',' << r.b << ',' << r.big_b << ',' << r.c
        << ',' << r.big_c << ',' << r.d << ',' << r.big_d << '\n';
  }
}

void write_count_json(std::ostream& out, const std::vector<CountRow>& rows) {
  nlohmann::ordered_json doc;
  doc["schema"] = "tripow.table/1";
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const CountRow& r : rows) {
    arr.push_back({{"n", r.n},
                   {"new_square", r.a},
                   {"distinct_squares", r.big_a},
                   {"squares_ending", r.b},
                   {"repeated_squares", r.big_b},
                   {"new_cube", r.c},
                   {"distinct_cubes", r.big_c},
                   {"cubes_ending", r.d},
                   {"repeated_cubes", r.big_d}});
  }
  out << doc.dump(2) << '\n';
}

void write_powers_csv(std::ostream& out, const std::vector<PowerOccurrence>& occurrences) {
  out << "end,root_length,exponent_num,exponent_den\n";
  for (const PowerOccurrence& occ : occurrences) {
    out << occ.end << ',' << occ.root_length << ',' << occ.exponent.num() << ','
        << occ.exponent.den() << '\n';
  }
}

void write_powers_json(std::ostream& out, const Rational& alpha,
                       const std::vector<PowerOccurrence>& occurrences) {
  nlohmann::ordered_json doc;
  doc["schema"] = "tripow.powers/1";
  doc["alpha"] = alpha.str();
  auto& arr = doc["occurrences"] = nlohmann::ordered_json::array();
  for (const PowerOccurrence& occ : occurrences) {
    arr.push_back({{"end", occ.end},
                   {"root_length", occ.root_length},
                   {"exponent_num", occ.exponent.num()},
                   {"exponent_den", occ.exponent.den()}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace tripow
