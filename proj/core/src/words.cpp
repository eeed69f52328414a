#include "tripow/words.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace tripow {

namespace {

// t_{-3}.. computed once, capped where the next term would leave int64.
const std::vector<std::int64_t>& tri_table() {
  static const std::vector<std::int64_t> table = [] {
    std::vector<std::int64_t> t{0, 0, 1, 1};  // t_{-3}, t_{-2}, t_{-1}, t_0
    for (;;) {
      std::int64_t next;
      const auto n = t.size();
      if (__builtin_add_overflow(t[n - 1], t[n - 2], &next) ||
          __builtin_add_overflow(next, t[n - 3], &next)) {
        break;
      }
      t.push_back(next);
    }
    return t;
  }();
  return table;
}

void check_letter(char letter) {
  if (letter != 'a' && letter != 'b' && letter != 'c') {
    throw DomainError(std::string("unexpected letter '") + letter + "'");
  }
}

}  // namespace

int max_tri_order() { return static_cast<int>(tri_table().size()) - 4; }

std::int64_t tri_number(int m) {
  if (m < -3) throw DomainError("tri_number: m must be >= -3, got " + std::to_string(m));
  if (m > max_tri_order()) {
    throw OverflowError("tri_number: t_" + std::to_string(m) + " exceeds 64-bit range");
  }
  return tri_table()[static_cast<std::size_t>(m) + 3];
}

std::string tri_prefix(std::int64_t n, std::int64_t cap) {
  if (n < 0) throw DomainError("tri_prefix: negative length");
  if (n > cap) {
    throw CapacityError("tri_prefix: length " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  if (n == 0) return {};
  std::string word = "a";
  while (static_cast<std::int64_t>(word.size()) < n) {
    std::string next;
    next.reserve(word.size() * 2);
    for (char ch : word) {
      switch (ch) {
        case 'a': next += "ab"; break;
        case 'b': next += "ac"; break;
        default: next += 'a'; break;
      }
      if (static_cast<std::int64_t>(next.size()) >= n) break;
    }
    word = std::move(next);
  }
  word.resize(static_cast<std::size_t>(n));
  return word;
}

std::string sigma_image(std::string_view word) {
  std::string out;
  out.reserve(word.size() * 2);
  for (char ch : word) {
    check_letter(ch);
    switch (ch) {
      case 'a': out += "ab"; break;
      case 'b': out += "ac"; break;
      default: out += 'a'; break;
    }
  }
  return out;
}

IndexedWord::IndexedWord(std::string letters) : letters_(std::move(letters)) {
  cum_a_.resize(letters_.size() + 1, 0);
  cum_b_.resize(letters_.size() + 1, 0);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    check_letter(letters_[i]);
    cum_a_[i + 1] = cum_a_[i] + (letters_[i] == 'a');
    cum_b_[i + 1] = cum_b_[i] + (letters_[i] == 'b');
  }
}

IndexedWord IndexedWord::tribonacci(std::int64_t n, std::int64_t cap) {
  return IndexedWord(tri_prefix(n, cap));
}

char IndexedWord::at(std::int64_t pos) const {
  if (pos < 1 || pos > size()) {
    throw DomainError("IndexedWord::at: position " + std::to_string(pos) + " outside [1.." +
                      std::to_string(size()) + "]");
  }
  return letters_[static_cast<std::size_t>(pos - 1)];
}

std::string_view IndexedWord::slice(std::int64_t i, std::int64_t j) const {
  if (j == i - 1) return {};
  if (i < 1 || j < i || j > size()) {
    throw DomainError("IndexedWord::slice: bad range [" + std::to_string(i) + ".." +
                      std::to_string(j) + "]");
  }
  return std::string_view(letters_).substr(static_cast<std::size_t>(i - 1),
                                           static_cast<std::size_t>(j - i + 1));
}

LetterCounts IndexedWord::counts(std::int64_t p) const {
  if (p < 0 || p > size()) {
    throw DomainError("IndexedWord::counts: p=" + std::to_string(p) + " outside [0.." +
                      std::to_string(size()) + "]");
  }
  const auto a = cum_a_[static_cast<std::size_t>(p)];
  const auto b = cum_b_[static_cast<std::size_t>(p)];
  return LetterCounts{a, b, p - a - b};
}

std::int64_t letter_end_position(char letter, std::int64_t p, const IndexedWord& word) {
  check_letter(letter);
  if (p < 1) throw DomainError("letter_end_position: p must be >= 1");
  const LetterCounts n = word.counts(p - 1);
  switch (letter) {
    case 'a': return checked_add(p, n.a + n.b);
    case 'b': return checked_add(checked_mul(2, p), 2 * n.a + n.b);
    default: return checked_add(checked_mul(4, p), 3 * n.a + 2 * n.b);
  }
}

std::int64_t kernel_number(int m) {
  if (m < 0) throw DomainError("kernel_number: m must be >= 0");
  if (m == 0) return 0;
  if (m <= 2) return 1;
  // closed form, parity-checked against the recurrence's guarantee
  const std::int64_t k =
      half_exact(checked_add(checked_add(tri_number(m - 3), tri_number(m - 5)), 1));
  return k;
}

KernelWord kernel_word(int m) {
  if (m < 1) throw DomainError("kernel_word: m must be >= 1");
  const std::int64_t k = kernel_number(m);
  if (m <= 3) {
    static constexpr std::array<char, 3> first{'a', 'b', 'c'};
    return KernelWord{m, 1, std::string(1, first[static_cast<std::size_t>(m - 1)])};
  }
  // K_m = (last letter of T_{m-1}) . T[1 .. k_m - 1]; the last letter of T_j
  // cycles a, b, c with j mod 3.
  static constexpr std::array<char, 3> last{'a', 'b', 'c'};
  std::string word(1, last[static_cast<std::size_t>((m - 1) % 3)]);
  word += tri_prefix(k - 1);
  return KernelWord{m, k, std::move(word)};
}

std::int64_t kernel_first_position(int m) {
  if (m < 1) throw DomainError("kernel_first_position: m must be >= 1");
  return half_exact(checked_sub(checked_add(tri_number(m), tri_number(m - 2)), 1));
}

std::int64_t kernel_position(int m, std::int64_t p, const IndexedWord& word) {
  if (m < 1) throw DomainError("kernel_position: m must be >= 1");
  if (p < 1) throw DomainError("kernel_position: p must be >= 1");
  const LetterCounts n = word.counts(p - 1);
  std::int64_t pos = checked_mul(p, tri_number(m - 1));
  pos = checked_add(pos, checked_mul(n.a, checked_add(tri_number(m - 2), tri_number(m - 3))));
  pos = checked_add(pos, checked_mul(n.b, tri_number(m - 2)));
  pos = checked_add(pos, kernel_number(m) - 1);
  if (p == 1 && pos != kernel_first_position(m)) {
    throw ParityError("kernel_position: p=1 closed form disagrees for m=" + std::to_string(m));
  }
  return pos;
}

std::vector<std::int64_t> occurrences(std::string_view needle, std::string_view haystack) {
  if (needle.empty()) throw DomainError("occurrences: empty needle");
  std::vector<std::int64_t> ends;
  std::size_t from = 0;
  for (;;) {
    const std::size_t hit = haystack.find(needle, from);
    if (hit == std::string_view::npos) break;
    ends.push_back(static_cast<std::int64_t>(hit + needle.size()));
    from = hit + 1;  // occurrences may overlap
  }
  return ends;
}

GapWord gap_word(std::string_view needle, std::int64_t p, std::string_view haystack) {
  if (p < 1) throw DomainError("gap_word: p must be >= 1");
  const auto ends = occurrences(needle, haystack);
  if (static_cast<std::int64_t>(ends.size()) < p + 1) {
    throw NotEnoughOccurrencesError("gap_word: needs " + std::to_string(p + 1) +
                                    " occurrences, found " + std::to_string(ends.size()));
  }
  const std::int64_t len =
      ends[static_cast<std::size_t>(p)] - ends[static_cast<std::size_t>(p - 1)] -
      static_cast<std::int64_t>(needle.size());
  GapWord gap{len, {}};
  if (len > 0) {
    gap.content = std::string(
        haystack.substr(static_cast<std::size_t>(ends[static_cast<std::size_t>(p - 1)]),
                        static_cast<std::size_t>(len)));
  }
  return gap;
}

KernelHit kernel_of(std::string_view w) {
  if (w.empty()) throw DomainError("kernel_of: empty word");
  const std::int64_t len = static_cast<std::int64_t>(w.size());
  const std::int64_t scan_len = std::max<std::int64_t>(4 * len, 1000);
  const std::string scan = tri_prefix(scan_len);
  if (scan.find(w) == std::string::npos) {
    throw NotAFactorError("kernel_of: word does not occur in T[1," + std::to_string(scan_len) +
                          "]");
  }
  int best = 0;
  for (int m = 1; kernel_number(m) <= len; ++m) best = m;
  for (int m = best; m >= 1; --m) {
    const KernelWord k = kernel_word(m);
    const std::size_t hit = w.find(k.word);
    if (hit == std::string_view::npos) continue;
    // the maximal kernel occurs exactly once inside any factor
    if (w.find(k.word, hit + 1) != std::string_view::npos) {
      throw NotAFactorError("kernel_of: maximal kernel occurs twice; not a factor of T");
    }
    return KernelHit{m, static_cast<std::int64_t>(hit) + 1};
  }
  throw NotAFactorError("kernel_of: no kernel word found");  // unreachable for letters a,b,c
}

FactorDecomposition decompose_factor(std::string_view w) {
  const KernelHit hit = kernel_of(w);
  const int m = hit.order;
  const std::int64_t t_prev = tri_number(m - 1);
  const std::int64_t i = t_prev - hit.offset + 1;
  const std::int64_t j =
      static_cast<std::int64_t>(w.size()) - (hit.offset - 1) - kernel_number(m);
  FactorDecomposition d{m, i, j};
  if (i < 1 || i > t_prev || j < 0 || j > t_prev - 1 || reconstruct_factor(d) != w) {
    throw NotAFactorError("decompose_factor: no valid decomposition");
  }
  return d;
}

std::string reconstruct_factor(const FactorDecomposition& d) {
  const int m = d.order;
  if (m < 1) throw DomainError("reconstruct_factor: order must be >= 1");
  const std::int64_t t_prev = tri_number(m - 1);
  const std::int64_t k = kernel_number(m);
  if (d.i < 1 || d.i > t_prev || d.j < 0 || d.j > t_prev - 1) {
    throw DomainError("reconstruct_factor: (i,j) out of range");
  }
  const IndexedWord t_m = IndexedWord::tribonacci(tri_number(m));
  std::string out;
  out += t_m.slice(d.i, t_prev - 1);       // suffix of T_{m-1} before the kernel
  out += kernel_word(m).word;
  out += t_m.slice(k, k + d.j - 1);        // continuation of T_m past the kernel prefix
  return out;
}

}  // namespace tripow
