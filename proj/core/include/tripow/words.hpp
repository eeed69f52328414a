#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripow/errors.hpp"

namespace tripow {

// The Tribonacci word T is the fixed point (starting with 'a') of the
// substitution a -> ab, b -> ac, c -> a. T_m denotes the m-th iterate of 'a'
// under the substitution, t_m its length:
//
//   m  :  -3  -2  -1   0   1    2       3
//   T_m:       eps  c   a   ab  abac    abacaba
//   t_m:   0   0   1   1   2    4       7        t_m = t_{m-1}+t_{m-2}+t_{m-3}
//
// Positions are 1-indexed throughout.

/// Hard cap for materialized prefixes (letters). Callers can pass their own.
inline constexpr std::int64_t kDefaultPrefixCap = std::int64_t{1} << 27;

/// Largest m for which t_m fits a signed 64-bit integer.
int max_tri_order();

/// t_m for m >= -3; overflow-checked.
std::int64_t tri_number(int m);

/// The exact length-n prefix T[1,n], built by iterating the substitution.
std::string tri_prefix(std::int64_t n, std::int64_t cap = kDefaultPrefixCap);

/// One application of the substitution a->ab, b->ac, c->a.
std::string sigma_image(std::string_view word);

struct LetterCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t total() const { return a + b + c; }
  bool operator==(const LetterCounts&) const = default;
};

/// A word over {a,b,c} with cumulative letter counts, 1-indexed.
class IndexedWord {
 public:
  IndexedWord() = default;
  explicit IndexedWord(std::string letters);

  /// T[1,n] with the count index built.
  static IndexedWord tribonacci(std::int64_t n, std::int64_t cap = kDefaultPrefixCap);

  std::int64_t size() const { return static_cast<std::int64_t>(letters_.size()); }
  std::string_view text() const { return letters_; }

  char at(std::int64_t pos) const;

  /// Letters of [i..j]; the empty word when j == i-1.
  std::string_view slice(std::int64_t i, std::int64_t j) const;

  /// Letter counts over [1..p]; p == 0 gives all zeros.
  LetterCounts counts(std::int64_t p) const;

 private:
  std::string letters_;
  std::vector<std::int64_t> cum_a_;  // cum_a_[p] = #a in [1..p]
  std::vector<std::int64_t> cum_b_;
};

/// Ending position of the p-th occurrence of the given letter (a_p, b_p, c_p):
///   a_p = p + #a(p-1) + #b(p-1)
///   b_p = 2p + 2#a(p-1) + #b(p-1)
///   c_p = 4p + 3#a(p-1) + 2#b(p-1)
/// where #x(q) counts letter x in T[1,q]. `word` must cover position p-1.
std::int64_t letter_end_position(char letter, std::int64_t p, const IndexedWord& word);

// ---- kernel words ------------------------------------------------------
//
// Kernel numbers: k_0 = 0, k_1 = k_2 = 1, k_m = k_{m-1}+k_{m-2}+k_{m-3}-1;
// equivalently k_m = (t_{m-3}+t_{m-5}+1)/2 for m >= 3. Kernel words:
// K_1 = a, K_2 = b, K_3 = c, and K_m is the last letter of T_{m-1} followed
// by the first k_m - 1 letters of T. The occurrences of K_m anchor the
// ending positions of every repetition counted by this library.

std::int64_t kernel_number(int m);

struct KernelWord {
  int order = 0;
  std::int64_t length = 0;
  std::string word;
};

KernelWord kernel_word(int m);

/// Ending position of the first occurrence of K_m: (t_m + t_{m-2} - 1) / 2.
std::int64_t kernel_first_position(int m);

/// Ending position of the p-th occurrence of K_m:
///   p*t_{m-1} + #a(p-1)*(t_{m-2}+t_{m-3}) + #b(p-1)*t_{m-2} + k_m - 1.
/// Cross-checked against the closed form at p == 1.
std::int64_t kernel_position(int m, std::int64_t p, const IndexedWord& word);

// ---- occurrence scans (no closed forms; shared with property tests) ----

/// Ending positions of all occurrences of `needle` in `haystack`, ascending.
std::vector<std::int64_t> occurrences(std::string_view needle, std::string_view haystack);

/// The word strictly between the p-th and (p+1)-th occurrences of `needle`.
/// signed_length = end_{p+1} - end_p - |needle|; negative when the
/// occurrences overlap, in which case no content is stored.
struct GapWord {
  std::int64_t signed_length = 0;
  std::string content;
};

GapWord gap_word(std::string_view needle, std::int64_t p, std::string_view haystack);

/// The maximal kernel word occurring in `w` (it occurs exactly once).
struct KernelHit {
  int order = 0;
  std::int64_t offset = 0;  // 1-based start of the kernel inside w
};

/// Finds the maximal kernel inside `w` after verifying that `w` occurs in T
/// (scan bound: a prefix of length max(4|w|, 1000); T is recurrent, so any
/// genuine factor of length L shows up within a small multiple of L).
KernelHit kernel_of(std::string_view w);

/// Unique expression of a factor w with kernel K_m as
///   w = T_{m-1}[i .. t_{m-1}-1] . K_m . T_m[k_m .. k_m+j-1],
/// 1 <= i <= t_{m-1}, 0 <= j <= t_{m-1}-1.
struct FactorDecomposition {
  int order = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  bool operator==(const FactorDecomposition&) const = default;
};

FactorDecomposition decompose_factor(std::string_view w);

/// Rebuilds the factor a decomposition describes; inverse of decompose_factor.
std::string reconstruct_factor(const FactorDecomposition& d);

}  // namespace tripow
