#include "tripow/alpha.hpp"

#include <algorithm>
#include <limits>

#include "tripow/oracle.hpp"
#include "tripow/squares.hpp"

namespace tripow {

namespace {

bool excluded_case1_occurrence(std::int64_t p, const IndexedWord& word) {
  // p of the form c_q exactly when T[p] == 'c'; p == c_q + 1 when T[p-1] == 'c'
  if (p > word.size()) {
    throw CapacityError("case index " + std::to_string(p) + " beyond the indexed prefix");
  }
  if (word.at(p) == 'c') return true;
  return p >= 2 && word.at(p - 1) == 'c';
}

}  // namespace

Rational PowerRun::exponent_at(std::int64_t offset) const {
  if (offset < 1 || offset > positions.size()) {
    throw DomainError("PowerRun::exponent_at: offset outside the run");
  }
  return Rational(2, 1) + Rational(offset - 1, root_length);
}

std::int64_t PowerRun::power_length_at(std::int64_t offset) const {
  if (offset < 1 || offset > positions.size()) {
    throw DomainError("PowerRun::power_length_at: offset outside the run");
  }
  return 2 * root_length + offset - 1;
}

Case1Run case1_positions(int m, std::int64_t p, const IndexedWord& word) {
  if (m < 4) throw DomainError("case1_positions: m must be >= 4");
  if (p < 1) throw DomainError("case1_positions: p must be >= 1");
  const std::int64_t c_p = letter_end_position('c', p, word);
  Case1Run run;
  run.left = square_case_set(1, m, c_p, word).positions;
  run.middle = square_case_set(3, m + 3, p, word).positions;
  run.right = square_case_set(1, m, c_p + 1, word).positions;
  run.run.positions = concat(concat(run.left, run.middle), run.right);
  run.run.root_length = tri_number(m - 1);
  const std::int64_t expected = half_exact(tri_number(m + 1) - tri_number(m - 1) - 1);
  if (run.run.positions.size() != expected) {
    throw ParityError("case1_positions: run size mismatch at (" + std::to_string(m) + "," +
                      std::to_string(p) + ")");
  }
  return run;
}

PowerRun case2_positions(int j, int m, std::int64_t p, const IndexedWord& word) {
  if (j < 1 || j > 3) throw DomainError("case2_positions: j must be 1..3");
  if (j == 1 && excluded_case1_occurrence(p, word)) {
    throw DomainError("case2_positions: j=1 occurrences of the form c_q or c_q+1 belong to "
                      "case-1 runs");
  }
  if (j == 3 && (m < 4 || m > 6)) {
    throw DomainError("case2_positions: j=3 runs exist only for m in {4,5,6}");
  }
  const SquareCaseSet set = square_case_set(j, m, p, word);
  return PowerRun{set.positions, set.root_length};
}

std::vector<PowerOccurrence> alpha_power_positions(const Rational& alpha, std::int64_t n_max,
                                                   std::int64_t cap) {
  if (alpha < Rational(2, 1)) throw DomainError("alpha_power_positions: alpha must be >= 2");
  if (n_max < 0) throw DomainError("alpha_power_positions: n_max must be >= 0");
  if (n_max < 8) return {};  // the first square ends at 8
  const IndexedWord word = IndexedWord::tribonacci(n_max, cap);
  std::vector<PowerOccurrence> out;

  auto emit = [&](const PowerRun& run) {
    if (run.root_length % alpha.den() != 0) return;
    const std::int64_t total = alpha.num() * (run.root_length / alpha.den());
    const std::int64_t offset = total - 2 * run.root_length + 1;  // alpha >= 2 makes this >= 1
    const Interval tail = run.positions.suffix_from(offset);
    for (std::int64_t q = tail.lo; q <= std::min(tail.hi, n_max); ++q) {
      out.push_back(PowerOccurrence{q, run.root_length, alpha});
    }
  };

  // case-1 runs; the run start grows with both m and p
  for (int m = 4;; ++m) {
    if (case1_positions(m, 1, word).run.positions.lo > n_max) break;
    for (std::int64_t p = 1;; ++p) {
      const Case1Run run = case1_positions(m, p, word);
      if (run.run.positions.lo > n_max) break;
      emit(run.run);
    }
  }
  // case-2 single sets
  for (int j = 1; j <= 3; ++j) {
    const int m_limit = (j == 3) ? 6 : std::numeric_limits<int>::max();
    for (int m = 4; m <= m_limit; ++m) {
      if (square_case_set(j, m, 1, word).positions.lo > n_max) break;
      for (std::int64_t p = 1;; ++p) {
        const SquareCaseSet set = square_case_set(j, m, p, word);
        if (set.positions.lo > n_max) break;
        if (j == 1 && excluded_case1_occurrence(p, word)) continue;
        emit(PowerRun{set.positions, set.root_length});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const PowerOccurrence& a, const PowerOccurrence& b) {
    return a.end != b.end ? a.end < b.end : a.root_length < b.root_length;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PowerOccurrence& a, const PowerOccurrence& b) {
                          return a.end == b.end && a.root_length == b.root_length;
                        }),
            out.end());
  return out;
}

Rational max_exponent_up_to(std::int64_t n) {
  if (n < 1) throw DomainError("max_exponent_up_to: n must be >= 1");
  return oracle::max_exponent(tri_prefix(n));
}

}  // namespace tripow
