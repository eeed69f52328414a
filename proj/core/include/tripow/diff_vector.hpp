#pragma once

#include <cstdint>
#include <vector>

#include "tripow/errors.hpp"

namespace tripow {

/// Dense per-position counts with block-aligned prefix sums. Built once by
/// the square/cube recursions, then queried for any n up to covered().
class DiffVector {
 public:
  DiffVector(std::vector<std::uint32_t> counts, std::vector<std::int64_t> block_ends);

  std::int64_t covered() const { return static_cast<std::int64_t>(counts_.size()); }

  /// Count at position n (1-based).
  std::uint32_t delta(std::int64_t n) const;

  /// Sum of counts over [1..n]; zero when n <= 0.
  std::int64_t prefix_sum(std::int64_t n) const;

 private:
  std::vector<std::uint32_t> counts_;      // counts_[i] = value at position i+1
  std::vector<std::int64_t> block_ends_;   // ascending; last entry == covered()
  std::vector<std::int64_t> block_sums_;   // cumulative sum through block_ends_[k]
};

}  // namespace tripow
