#pragma once

#include <cstdint>
#include <string>

#include "tripow/errors.hpp"

namespace tripow {

/// Closed integer interval [lo..hi]; empty exactly when lo > hi.
/// These model the contiguous position sets the counting recursions work
/// with (blocks, case sets); empty intervals are legal values and propagate
/// silently through shifts and concatenation.
struct Interval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  static Interval closed(std::int64_t lo, std::int64_t hi) { return Interval{lo, hi}; }
  static Interval empty() { return Interval{1, 0}; }

  bool is_empty() const { return lo > hi; }
  std::int64_t size() const { return is_empty() ? 0 : hi - lo + 1; }
  bool contains(std::int64_t n) const { return lo <= n && n <= hi; }

  Interval shifted(std::int64_t k) const {
    if (is_empty()) return *this;
    return Interval{checked_add(lo, k), checked_add(hi, k)};
  }

  /// 1-based element access: at(1) == lo, at(size()) == hi.
  std::int64_t at(std::int64_t i) const {
    if (i < 1 || i > size()) {
      throw DomainError("Interval::at: index " + std::to_string(i) + " outside " + str());
    }
    return lo + i - 1;
  }

  /// Elements from the i-th through the last (empty when i > size()).
  Interval suffix_from(std::int64_t i) const {
    if (i < 1) throw DomainError("Interval::suffix_from: index must be >= 1");
    if (i > size()) return empty();
    return Interval{lo + i - 1, hi};
  }

  std::string str() const {
    if (is_empty()) return "[]";
    if (lo == hi) return "[" + std::to_string(lo) + "]";
    return "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
  }

  bool operator==(const Interval&) const = default;
};

/// Concatenation [U,V]: requires hi_U + 1 == lo_V unless one side is empty.
inline Interval concat(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  if (a.hi + 1 != b.lo) {
    throw DomainError("concat: intervals " + a.str() + " and " + b.str() + " are not adjacent");
  }
  return Interval{a.lo, b.hi};
}

}  // namespace tripow
