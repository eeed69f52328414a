#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "tripow/errors.hpp"

namespace tripow {

/// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
/// Exponents of repetitions are handled with these end to end; no floating
/// point enters the enumeration paths.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::int64_t floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }

  bool is_integer() const { return den_ == 1; }
  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "7/2" when fractional, "3" when integral.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "P" or "P/Q"; DomainError on anything else or Q == 0.
  static Rational parse(std::string_view text);

 private:
  void normalize() {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tripow
