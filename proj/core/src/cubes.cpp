#include "tripow/cubes.hpp"

namespace tripow {

namespace {

std::int64_t first_cube_onset(int m) {
  // smallest position of the p = 1 cube set for order m: t_{m-1} + 2t_{m-4}
  return checked_add(tri_number(m - 1), checked_mul(2, tri_number(m - 4)));
}

std::int64_t last_cube_onset(int m) {
  // largest position of the p = 1 cube set: (3t_{m-1} - t_{m-3} - 3) / 2
  return half_exact(checked_sub(checked_mul(3, tri_number(m - 1)), tri_number(m - 3) + 3));
}

}  // namespace

CubeCaseSet cube_case_set(int m, std::int64_t p, const IndexedWord& word) {
  if (m < 7) throw DomainError("cube_case_set: m must be >= 7");
  if (p < 1) throw DomainError("cube_case_set: p must be >= 1");
  const std::int64_t anchor = kernel_position(m, p, word);
  CubeCaseSet set;
  set.order = m;
  set.occurrence = p;
  set.positions =
      Interval::closed(half_exact(-tri_number(m - 2) + 5 * tri_number(m - 4) + 1),
                       tri_number(m - 4) - 1)
          .shifted(anchor);
  set.root_length = tri_number(m - 4);
  const std::int64_t expected = half_exact(tri_number(m - 6) + tri_number(m - 8) - 1);
  if (set.positions.size() != expected) {
    throw ParityError("cube_case_set: cardinality mismatch for (" + std::to_string(m) + "," +
                      std::to_string(p) + ")");
  }
  return set;
}

int distinct_cube_delta(std::int64_t n) {
  if (n < 1) throw DomainError("distinct_cube_delta: n must be >= 1");
  for (int m = 7;; ++m) {
    if (m - 1 > max_tri_order()) throw OverflowError("distinct_cube_delta: n beyond t-table");
    if (first_cube_onset(m) > n) break;
    if (n <= last_cube_onset(m)) return 1;
  }
  return 0;
}

std::int64_t distinct_cube_count(std::int64_t n) {
  if (n < 0) throw DomainError("distinct_cube_count: n must be >= 0");
  if (n <= 57) return 0;
  int m = 7;  // bin by t_{m-1}+2t_{m-4} <= n < t_m+2t_{m-3}
  while (checked_add(tri_number(m), checked_mul(2, tri_number(m - 3))) <= n) {
    if (m >= max_tri_order()) throw OverflowError("distinct_cube_count: n beyond t-table");
    ++m;
  }
  if (n <= last_cube_onset(m)) {
    return n - half_exact(checked_mul(3, tri_number(m - 2)) + tri_number(m - 3) +
                          checked_mul(4, tri_number(m - 4)) + m - 6);
  }
  return half_exact(tri_number(m - 5) + tri_number(m - 6) - m + 3);
}

DiffVector cube_diff_vector(std::int64_t n_max, std::int64_t cap) {
  if (n_max < 0) throw DomainError("cube_diff_vector: n_max must be >= 0");
  // seed over [1..176] == Theta_0 .. Theta_7: ones at 58, 107, 108, 139
  std::vector<std::uint32_t> counts(176, 0);
  for (std::int64_t pos : {58, 107, 108, 139}) counts[static_cast<std::size_t>(pos - 1)] = 1;
  std::vector<std::int64_t> block_ends{176};

  for (int m = 8; static_cast<std::int64_t>(counts.size()) < n_max; ++m) {
    const Interval target = theta_block(m);
    if (target.lo != static_cast<std::int64_t>(counts.size()) + 1) {
      throw ParityError("cube_diff_vector: block " + target.str() + " not contiguous");
    }
    if (target.hi > cap) {
      throw CapacityError("cube_diff_vector: block end " + std::to_string(target.hi) +
                          " exceeds cap " + std::to_string(cap));
    }
    const Interval src = concat(concat(theta_block(m - 3), theta_block(m - 2)),
                                theta_block(m - 1));
    if (src.size() != target.size()) {
      throw ParityError("cube_diff_vector: source/target size mismatch");
    }
    const std::int64_t zeros = half_exact(-tri_number(m - 1) + 5 * tri_number(m - 3) + 1);
    const std::int64_t ones = half_exact(tri_number(m - 1) - 3 * tri_number(m - 3) - 1);
    counts.reserve(static_cast<std::size_t>(target.hi));
    for (std::int64_t i = 0; i < src.size(); ++i) {
      std::uint32_t value = counts[static_cast<std::size_t>(src.lo + i - 1)];
      counts.push_back(value + ((i >= zeros && i < zeros + ones) ? 1 : 0));
    }
    block_ends.push_back(target.hi);
  }
  return DiffVector(std::move(counts), std::move(block_ends));
}

std::int64_t repeated_cube_count(std::int64_t n) {
  if (n < 0) throw DomainError("repeated_cube_count: n must be >= 0");
  if (n == 0) return 0;
  return cube_diff_vector(n).prefix_sum(n);
}

Interval cube_gamma_set(int m, std::int64_t p, const IndexedWord& word) {
  if (m < 7) throw DomainError("cube_gamma_set: m must be >= 7");
  const std::int64_t anchor = kernel_position(m, p, word);
  return Interval::closed(0, tri_number(m - 1) - 1).shifted(anchor);
}

}  // namespace tripow
