#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tripow/alpha.hpp"

namespace tripow {

/// One row of the per-position count table. Lowercase fields are the
/// per-position deltas, uppercase the running totals.
struct CountRow {
  std::int64_t n = 0;
  int a = 0;                   // 1 when a new distinct square ends at n
  std::int64_t big_a = 0;      // distinct squares in T[1,n]
  std::uint32_t b = 0;         // squares ending at n
  std::int64_t big_b = 0;      // repeated squares in T[1,n]
  int c = 0;
  std::int64_t big_c = 0;
  std::uint32_t d = 0;
  std::int64_t big_d = 0;
};

std::vector<CountRow> count_table(std::int64_t from, std::int64_t to);

// CSV schema v1: header "n,a,A,b,B,c,C,d,D", one row per position, plain
// decimal integers. JSON schema v1: {"schema": "...", "rows": [...]} with
// full names per field; exponents serialize as numerator/denominator.

void write_count_csv(std::ostream& out, const std::vector<CountRow>& rows);
void write_count_json(std::ostream& out, const std::vector<CountRow>& rows);

void write_powers_csv(std::ostream& out, const std::vector<PowerOccurrence>& occurrences);
void write_powers_json(std::ostream& out, const Rational& alpha,
                       const std::vector<PowerOccurrence>& occurrences);

}  // namespace tripow
