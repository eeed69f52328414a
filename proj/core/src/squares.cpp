#include "tripow/squares.hpp"

namespace tripow {

namespace {

std::int64_t theta_offset(int m) {
  // positions of Theta_m start one past this offset
  return half_exact(checked_sub(checked_add(tri_number(m + 1), tri_number(m - 1)), 3));
}

// 2*t_m <= n without risking overflow in the product
bool twice_tri_at_most(int m, std::int64_t n) { return tri_number(m) <= n / 2; }

}  // namespace

BlockTriple block_triple(int m) {
  if (m < 0) throw DomainError("block_triple: m must be >= 0");
  const std::int64_t t_m = tri_number(m);
  const std::int64_t u_off = theta_offset(m);
  const std::int64_t v_off = half_exact(checked_sub(checked_mul(3, t_m), tri_number(m - 2) + 3));
  const std::int64_t w_off = half_exact(checked_add(checked_mul(3, t_m), tri_number(m - 2) - 3));
  BlockTriple blocks;
  blocks.order = m;
  blocks.u = Interval::closed(1, tri_number(m - 3)).shifted(u_off);
  blocks.v = Interval::closed(1, tri_number(m - 2)).shifted(v_off);
  blocks.w = Interval::closed(1, tri_number(m - 1)).shifted(w_off);
  return blocks;
}

Interval theta_block(int m) {
  if (m < 0) throw DomainError("theta_block: m must be >= 0");
  return Interval::closed(1, tri_number(m)).shifted(theta_offset(m));
}

int distinct_square_delta(std::int64_t n) {
  if (n < 1) throw DomainError("distinct_square_delta: n must be >= 1");
  // New squares appear exactly on [2t_{m-1} .. t_m+2t_{m-3}-1] and
  // [2t_m-t_{m-1} .. (3t_m+t_{m-2}-3)/2]; both lie inside [2t_{m-1}, 2t_m).
  for (int m = 3; m - 1 <= max_tri_order() && twice_tri_at_most(m - 1, n); ++m) {
    const std::int64_t t_m = tri_number(m);
    const std::int64_t t1 = tri_number(m - 1);
    if (n >= 2 * t1 && n <= checked_add(t_m, checked_mul(2, tri_number(m - 3))) - 1) return 1;
    if (n >= checked_sub(checked_mul(2, t_m), t1) &&
        n <= half_exact(checked_add(checked_mul(3, t_m), tri_number(m - 2) - 3))) {
      return 1;
    }
  }
  return 0;
}

std::int64_t distinct_square_count(std::int64_t n) {
  if (n < 0) throw DomainError("distinct_square_count: n must be >= 0");
  if (n <= 7) return 0;
  int m = 3;  // bin by 2t_{m-1} <= n < 2t_m
  while (twice_tri_at_most(m, n)) {
    if (m >= max_tri_order()) throw OverflowError("distinct_square_count: n beyond t-table");
    ++m;
  }
  const std::int64_t beta = checked_add(tri_number(m), checked_mul(2, tri_number(m - 3))) - 1;
  const std::int64_t gamma = checked_sub(checked_mul(2, tri_number(m)), tri_number(m - 1));
  const std::int64_t theta =
      half_exact(checked_add(checked_mul(3, tri_number(m)), tri_number(m - 2) - 3));
  if (n < beta) return n - half_exact(tri_number(m) + tri_number(m - 3) + m + 3);
  if (n < gamma) return half_exact(tri_number(m) + checked_mul(3, tri_number(m - 3)) - m - 5);
  if (n < theta) {
    return n - half_exact(tri_number(m - 1) + checked_mul(3, tri_number(m - 2)) + m + 3);
  }
  return half_exact(checked_mul(2, tri_number(m - 1)) + tri_number(m - 2) +
                    checked_mul(3, tri_number(m - 3)) - m - 6);
}

DiffVector square_diff_vector(std::int64_t n_max, std::int64_t cap) {
  if (n_max < 0) throw DomainError("square_diff_vector: n_max must be >= 0");
  std::vector<std::uint32_t> counts{0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1};  // [1..14]
  std::vector<std::int64_t> block_ends{14};

  auto append_block = [&](const Interval& block, int src_order, bool ones_lead,
                          std::int64_t run) {
    if (block.lo != static_cast<std::int64_t>(counts.size()) + 1) {
      throw ParityError("square_diff_vector: block " + block.str() + " not contiguous");
    }
    if (block.hi > cap) {
      throw CapacityError("square_diff_vector: block end " + std::to_string(block.hi) +
                          " exceeds cap " + std::to_string(cap));
    }
    const Interval src = theta_block(src_order);
    if (src.size() != block.size()) {
      throw ParityError("square_diff_vector: source/target size mismatch");
    }
    counts.reserve(static_cast<std::size_t>(block.hi));
    for (std::int64_t i = 0; i < src.size(); ++i) {
      std::uint32_t value = counts[static_cast<std::size_t>(src.lo + i - 1)];
      const bool in_run = ones_lead ? (i < run) : (i >= src.size() - run);
      counts.push_back(value + (in_run ? 1 : 0));
    }
    block_ends.push_back(block.hi);
  };

  for (int m = 4; static_cast<std::int64_t>(counts.size()) < n_max; ++m) {
    const BlockTriple blocks = block_triple(m);
    append_block(blocks.u, m - 3, /*ones_lead=*/true,
                 half_exact(-tri_number(m - 1) + 5 * tri_number(m - 3) + 1));
    append_block(blocks.v, m - 2, /*ones_lead=*/false,
                 half_exact(tri_number(m - 2) + tri_number(m - 4) - 1));
    append_block(blocks.w, m - 1, /*ones_lead=*/false,
                 half_exact(tri_number(m - 1) - tri_number(m - 3) - 1));
  }
  return DiffVector(std::move(counts), std::move(block_ends));
}

std::int64_t repeated_square_count(std::int64_t n) {
  if (n < 0) throw DomainError("repeated_square_count: n must be >= 0");
  if (n == 0) return 0;
  return square_diff_vector(n).prefix_sum(n);
}

SquareCaseSet square_case_set(int case_index, int m, std::int64_t p, const IndexedWord& word) {
  if (case_index < 1 || case_index > 3) throw DomainError("square_case_set: case must be 1..3");
  if (m < 4) throw DomainError("square_case_set: m must be >= 4");
  if (p < 1) throw DomainError("square_case_set: p must be >= 1");
  const std::int64_t anchor = kernel_position(m, p, word);
  SquareCaseSet set;
  set.case_index = case_index;
  set.order = m;
  set.occurrence = p;
  std::int64_t expected_size = 0;
  switch (case_index) {
    case 1:
      set.positions = Interval::closed(half_exact(tri_number(m - 1) - tri_number(m - 3) + 1),
                                       tri_number(m - 2) - 1)
                          .shifted(checked_add(anchor, tri_number(m - 3) + tri_number(m - 4)));
      set.root_length = tri_number(m - 1);
      expected_size = half_exact(tri_number(m + 1) - 3 * tri_number(m - 1) - 1);
      break;
    case 2:
      set.positions =
          Interval::closed(
              half_exact(tri_number(m - 1) - 2 * tri_number(m - 2) + tri_number(m - 3) + 1),
              tri_number(m - 3) - 1)
              .shifted(checked_add(anchor, tri_number(m - 4)));
      set.root_length = tri_number(m - 3) + tri_number(m - 4);
      expected_size = half_exact(tri_number(m + 1) - 3 * tri_number(m - 1) - 1);
      break;
    default:
      set.positions =
          Interval::closed(0, half_exact(-tri_number(m - 2) + 5 * tri_number(m - 4) - 1))
              .shifted(anchor);
      set.root_length = tri_number(m - 4);
      expected_size = half_exact(-tri_number(m - 2) + 5 * tri_number(m - 4) + 1);
      break;
  }
  if (set.positions.size() != expected_size) {
    throw ParityError("square_case_set: cardinality mismatch for (" +
                      std::to_string(case_index) + "," + std::to_string(m) + "," +
                      std::to_string(p) + ")");
  }
  return set;
}

Interval square_gamma_set(int case_index, int m, std::int64_t p, const IndexedWord& word) {
  if (case_index < 1 || case_index > 3) throw DomainError("square_gamma_set: case must be 1..3");
  if (m < 4) throw DomainError("square_gamma_set: m must be >= 4");
  const std::int64_t anchor = kernel_position(m, p, word);
  switch (case_index) {
    case 1:
      return Interval::closed(0, tri_number(m - 2) - 1)
          .shifted(checked_add(anchor, tri_number(m - 3) + tri_number(m - 4)));
    case 2:
      return Interval::closed(0, tri_number(m - 3) - 1)
          .shifted(checked_add(anchor, tri_number(m - 4)));
    default:
      return Interval::closed(0, tri_number(m - 4) - 1).shifted(anchor);
  }
}

}  // namespace tripow
