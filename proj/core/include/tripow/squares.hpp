#pragma once

#include <cstdint>

#include "tripow/diff_vector.hpp"
#include "tripow/interval.hpp"
#include "tripow/words.hpp"

namespace tripow {

// Square counting. Every square in T ends inside one of the case sets
//
//   case 1: [ (t_{m-1}-t_{m-3}+1)/2 .. t_{m-2}-1 ] + (K_m)_p + t_{m-3}+t_{m-4},  root t_{m-1}
//   case 2: [ (t_{m-1}-2t_{m-2}+t_{m-3}+1)/2 .. t_{m-3}-1 ] + (K_m)_p + t_{m-4}, root t_{m-3}+t_{m-4}
//   case 3: [ 0 .. (-t_{m-2}+5t_{m-4}-1)/2 ] + (K_m)_p,                          root t_{m-4}
//
// for m >= 4, p >= 1, where (K_m)_p is the p-th kernel occurrence end. The
// p = 1 sets tile the positions where a previously unseen square first
// completes; per-position multiplicities over all p follow a block
// recursion on the partition U_m, V_m, W_m of the positive integers.

/// The three consecutive blocks of order m:
///   U_m = [1..t_{m-3}] + (t_{m+1}+t_{m-1}-3)/2
///   V_m = [1..t_{m-2}] + (3t_m-t_{m-2}-3)/2
///   W_m = [1..t_{m-1}] + (3t_m+t_{m-2}-3)/2
/// U_0, V_0, U_1 are empty; the sequence U_0,V_0,W_0,U_1,... tiles [1..).
struct BlockTriple {
  int order = 0;
  Interval u, v, w;
};

BlockTriple block_triple(int m);

/// [U_m, V_m, W_m] == [1..t_m] + (t_{m+1}+t_{m-1}-3)/2.
Interval theta_block(int m);

/// 1 when a square word unseen in T[1,n-1] ends at n, else 0.
int distinct_square_delta(std::int64_t n);

/// A(n): number of distinct square words in T[1,n]. Piecewise closed form;
/// equals the running sum of distinct_square_delta.
std::int64_t distinct_square_count(std::int64_t n);

/// Per-position counts of squares ending at each n <= n_max (positions up to
/// the end of the last emitted block are covered). Seeded over [1..14], then
/// each block of order m repeats the counts over the three blocks of order
/// m-3 / m-2 / m-1 plus a 0/1 run:
///   b(U_m) = b(Theta_{m-3}) + ones-prefix (-t_{m-1}+5t_{m-3}+1)/2
///   b(V_m) = b(Theta_{m-2}) + ones-suffix (t_{m-2}+t_{m-4}-1)/2
///   b(W_m) = b(Theta_{m-1}) + ones-suffix (t_{m-1}-t_{m-3}-1)/2
inline constexpr std::int64_t kDefaultDiffCap = std::int64_t{1} << 26;
DiffVector square_diff_vector(std::int64_t n_max, std::int64_t cap = kDefaultDiffCap);

/// B(n): squares counted with multiplicity by ending position. Builds the
/// difference vector internally; keep a DiffVector for repeated queries.
std::int64_t repeated_square_count(std::int64_t n);

struct SquareCaseSet {
  int case_index = 0;          // 1, 2 or 3
  int order = 0;               // m
  std::int64_t occurrence = 0; // p
  Interval positions;          // ending positions of the squares
  std::int64_t root_length = 0;
};

/// Case set for (case_index, m, p); m >= 4. `word` must cover p-1 letters.
SquareCaseSet square_case_set(int case_index, int m, std::int64_t p, const IndexedWord& word);

/// The enclosing interval the tree rooted at (case_index, m, 1) fills:
///   Gamma^1 = [0..t_{m-2}-1] + (K_m)_p + t_{m-3}+t_{m-4}
///   Gamma^2 = [0..t_{m-3}-1] + (K_m)_p + t_{m-4}
///   Gamma^3 = [0..t_{m-4}-1] + (K_m)_p
Interval square_gamma_set(int case_index, int m, std::int64_t p, const IndexedWord& word);

}  // namespace tripow
