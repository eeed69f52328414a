#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tripow {

/// Argument outside the defined domain of an operation.
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A checked 64-bit computation would wrap.
class OverflowError : public std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// A request exceeds the configured memory/size budget.
class CapacityError : public std::length_error {
  using std::length_error::length_error;
};

/// An exact halving hit an odd numerator; signals an index or transcription bug.
class ParityError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// The word does not occur in the Tribonacci sequence.
class NotAFactorError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Fewer occurrences exist than the requested index.
class NotEnoughOccurrencesError : public std::out_of_range {
  using std::out_of_range::out_of_range;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("checked_add: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("checked_sub: " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("checked_mul: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// Exact division by two. Every closed form in this library that divides by
/// two is provably even; an odd numerator means the formula was mistranscribed.
inline std::int64_t half_exact(std::int64_t v) {
  if (v % 2 != 0) {
    throw ParityError("half_exact: odd numerator " + std::to_string(v));
  }
  return v / 2;
}

}  // namespace tripow
