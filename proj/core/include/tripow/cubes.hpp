#pragma once

#include <cstdint>

#include "tripow/diff_vector.hpp"
#include "tripow/interval.hpp"
#include "tripow/squares.hpp"
#include "tripow/words.hpp"

namespace tripow {

// Cube counting. Cubes have a single case: for m >= 7, p >= 1 the cubes with
// kernel order m and root t_{m-4} end exactly at
//
//   [ (-t_{m-2}+5t_{m-4}+1)/2 .. t_{m-4}-1 ] + (K_m)_p.
//
// The per-position multiplicities follow one block recursion on Theta_m.

struct CubeCaseSet {
  int order = 0;
  std::int64_t occurrence = 0;
  Interval positions;
  std::int64_t root_length = 0;  // t_{m-4}
};

CubeCaseSet cube_case_set(int m, std::int64_t p, const IndexedWord& word);

/// 1 when a cube word unseen in T[1,n-1] ends at n, else 0.
int distinct_cube_delta(std::int64_t n);

/// C(n): number of distinct cube words in T[1,n]. Zero through n = 57.
std::int64_t distinct_cube_count(std::int64_t n);

/// Per-position counts of cubes ending at each n <= n_max. Seeded over
/// [1..176], then for m >= 8:
///   d(Theta_m) = d([Theta_{m-3}, Theta_{m-2}, Theta_{m-1}])
///              + zeros (-t_{m-1}+5t_{m-3}+1)/2
///              , ones  (t_{m-1}-3t_{m-3}-1)/2
///              , zeros t_{m-1}+t_{m-2}
DiffVector cube_diff_vector(std::int64_t n_max, std::int64_t cap = kDefaultDiffCap);

/// D(n): cubes counted with multiplicity by ending position.
std::int64_t repeated_cube_count(std::int64_t n);

/// Enclosing interval of the tree rooted at (m, 1):
///   Gamma_m = [0..t_{m-1}-1] + (K_m)_p.
Interval cube_gamma_set(int m, std::int64_t p, const IndexedWord& word);

}  // namespace tripow
