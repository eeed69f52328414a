#include "tripow/diff_vector.hpp"

#include <algorithm>
#include <string>

namespace tripow {

DiffVector::DiffVector(std::vector<std::uint32_t> counts, std::vector<std::int64_t> block_ends)
    : counts_(std::move(counts)), block_ends_(std::move(block_ends)) {
  if (block_ends_.empty() || block_ends_.back() != covered()) {
    throw DomainError("DiffVector: block ends must close at the covered length");
  }
  block_sums_.reserve(block_ends_.size());
  std::int64_t total = 0;
  std::int64_t pos = 0;
  for (std::int64_t end : block_ends_) {
    if (end <= pos) throw DomainError("DiffVector: block ends must be ascending");
    for (; pos < end; ++pos) total += counts_[static_cast<std::size_t>(pos)];
    block_sums_.push_back(total);
  }
}

std::uint32_t DiffVector::delta(std::int64_t n) const {
  if (n < 1 || n > covered()) {
    throw DomainError("DiffVector::delta: position " + std::to_string(n) + " outside [1.." +
                      std::to_string(covered()) + "]");
  }
  return counts_[static_cast<std::size_t>(n - 1)];
}

std::int64_t DiffVector::prefix_sum(std::int64_t n) const {
  if (n <= 0) return 0;
  if (n > covered()) {
    throw DomainError("DiffVector::prefix_sum: position " + std::to_string(n) + " beyond " +
                      std::to_string(covered()));
  }
  // last block boundary at or below n, then walk the remainder
  const auto it = std::upper_bound(block_ends_.begin(), block_ends_.end(), n);
  std::int64_t total = 0;
  std::int64_t pos = 0;
  if (it != block_ends_.begin()) {
    const auto idx = static_cast<std::size_t>(it - block_ends_.begin() - 1);
    total = block_sums_[idx];
    pos = block_ends_[idx];
  }
  for (; pos < n; ++pos) total += counts_[static_cast<std::size_t>(pos)];
  return total;
}

}  // namespace tripow
