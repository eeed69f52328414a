#pragma once

#include <cstdint>
#include <vector>

#include "tripow/interval.hpp"
#include "tripow/rational.hpp"
#include "tripow/words.hpp"

namespace tripow {

// Fractional powers. A run of consecutive square-ending positions sharing
// one root length rho yields higher powers: the suffix of the run starting
// at its i-th element consists of ending positions of (2 + (i-1)/rho)-powers
// of length 2*rho + i - 1. Runs come in two flavours:
//
//   case 1:  [K^1_{m,c_p} | K^3_{m+3,p} | K^1_{m,c_p+1}]   root t_{m-1}
//            (three adjacent case sets; this is where exponents reach and
//             pass 3, so cubes live exactly in these runs)
//   case 2:  any other single case set K^j_{m,p}           root per case j
//            j=1 with p not of the form c_q or c_q+1; j=3 only for m in
//            {4,5,6} (for m >= 7 those positions sit inside a case-1 run).

/// A run of square ends with one root; offsets grade into higher exponents.
struct PowerRun {
  Interval positions;
  std::int64_t root_length = 0;

  /// Exponent carried by the run's suffix from 1-based offset i on.
  Rational exponent_at(std::int64_t offset) const;

  /// Total letters of the power ending at offset i: 2*root + i - 1.
  std::int64_t power_length_at(std::int64_t offset) const;
};

struct Case1Run {
  Interval left;    // K^1_{m, c_p}
  Interval middle;  // K^3_{m+3, p}
  Interval right;   // K^1_{m, c_p+1}
  PowerRun run;     // their concatenation
};

/// The case-1 run for (m, p); m >= 4. `word` must cover c_p.
Case1Run case1_positions(int m, std::int64_t p, const IndexedWord& word);

/// The case-2 run for case set (j, m, p); DomainError on the excluded
/// combinations (j=1 with p in {c_q, c_q+1}; j=3 with m outside {4,5,6}).
PowerRun case2_positions(int j, int m, std::int64_t p, const IndexedWord& word);

/// One repetition: `exponent` copies of a root ending at `end` (the
/// fractional tail is a prefix of the root).
struct PowerOccurrence {
  std::int64_t end = 0;
  std::int64_t root_length = 0;
  Rational exponent;
  bool operator==(const PowerOccurrence&) const = default;
};

/// All ending positions <= n_max of exact alpha-powers, alpha >= 2, one
/// entry per (end, root_length), sorted by (end, root_length). alpha's
/// denominator must divide the root for a power of that root to exist.
std::vector<PowerOccurrence> alpha_power_positions(const Rational& alpha, std::int64_t n_max,
                                                   std::int64_t cap = kDefaultPrefixCap);

/// Largest exponent among repetitions ending at or before n, via the
/// brute-force scan (budget-capped).
Rational max_exponent_up_to(std::int64_t n);

}  // namespace tripow
