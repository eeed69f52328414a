#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tripow/rational.hpp"

namespace tripow::oracle {

// Brute-force ground truth on an explicit word. Everything here works by
// direct letter comparison on the materialized text; nothing is imported
// from the closed-form counting modules, so differential runs against them
// are meaningful. Quadratic scans are budget-capped, not optimized.

inline constexpr std::int64_t kDefaultScanBudget = 20000;

/// Root lengths L with word[n-2L+1..n-L] == word[n-L+1..n], ascending.
std::vector<std::int64_t> square_roots_ending_at(std::string_view word, std::int64_t n);
std::int64_t squares_ending_at(std::string_view word, std::int64_t n);

/// Root lengths of cubes (three equal consecutive blocks) ending at n.
std::vector<std::int64_t> cube_roots_ending_at(std::string_view word, std::int64_t n);
std::int64_t cubes_ending_at(std::string_view word, std::int64_t n);

/// Number of distinct square (cube) words occurring within word[1..n].
std::int64_t distinct_squares(std::string_view word, std::int64_t n,
                              std::int64_t budget = kDefaultScanBudget);
std::int64_t distinct_cubes(std::string_view word, std::int64_t n,
                            std::int64_t budget = kDefaultScanBudget);

/// Per-position repetition data over word[1..N], all 1-indexed (entry [0]
/// unused). max_exponent[n] is the largest (run+L)/L over root lengths L,
/// where run extends the period-L suffix ending at n; 1/1 when no position
/// repeats.
struct RepetitionScan {
  std::vector<std::uint32_t> squares_ending;
  std::vector<std::uint32_t> cubes_ending;
  std::vector<std::uint32_t> new_squares;  // first completion of a distinct square word
  std::vector<std::uint32_t> new_cubes;
  std::vector<Rational> max_exponent;
};

RepetitionScan scan_repetitions(std::string_view word,
                                std::int64_t budget = kDefaultScanBudget);

/// Largest exponent of any repetition in the word, as an exact rational.
Rational max_exponent(std::string_view word, std::int64_t budget = kDefaultScanBudget);

/// Baseline CSV (one row per position) for regression comparison:
/// n,squares_ending,new_squares,cubes_ending,new_cubes,max_exp_num,max_exp_den
void write_baseline_csv(std::ostream& out, const RepetitionScan& scan);

}  // namespace tripow::oracle
