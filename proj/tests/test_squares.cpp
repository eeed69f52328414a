#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "tripow/oracle.hpp"
#include "tripow/power_tree.hpp"
#include "tripow/squares.hpp"

using namespace tripow;

TEST_CASE("blocks") {
  const BlockTriple b2 = block_triple(2);
  CHECK(b2.u == Interval::closed(4, 4));
  CHECK(b2.v == Interval::closed(5, 5));
  CHECK(b2.w == Interval::closed(6, 7));

  const BlockTriple b0 = block_triple(0);
  CHECK(b0.u.is_empty());
  CHECK(b0.v.is_empty());
  CHECK(b0.w == Interval::closed(1, 1));

  CHECK(theta_block(3) == Interval::closed(8, 14));
  CHECK(theta_block(0) == Interval::closed(1, 1));

  SUBCASE("blocks tile the positive integers in U,V,W order") {
    std::int64_t next = 1;
    for (int m = 0; m <= 12; ++m) {
      const BlockTriple blocks = block_triple(m);
      CHECK(theta_block(m) == concat(concat(blocks.u, blocks.v), blocks.w));
      for (const Interval& block : {blocks.u, blocks.v, blocks.w}) {
        if (block.is_empty()) continue;
        CHECK(block.lo == next);
        next = block.hi + 1;
      }
    }
  }
}

TEST_CASE("square case sets") {
  const IndexedWord word = IndexedWord::tribonacci(400);
  const SquareCaseSet first = square_case_set(1, 4, 1, word);
  CHECK(first.positions == Interval::closed(14, 14));
  CHECK(first.root_length == 7);
  CHECK(square_case_set(1, 8, 1, word).positions == Interval::closed(162, 176));
  CHECK(square_case_set(1, 8, 1, word).root_length == 81);
  CHECK(square_case_set(3, 8, 1, word).positions == Interval::closed(96, 106));
  CHECK(square_case_set(3, 8, 1, word).root_length == 13);

  CHECK_THROWS_AS(square_case_set(0, 4, 1, word), DomainError);
  CHECK_THROWS_AS(square_case_set(1, 3, 1, word), DomainError);
  CHECK_THROWS_AS(square_case_set(1, 4, 0, word), DomainError);

  SUBCASE("every member position ends a square of the stated root") {
    const std::string prefix = tri_prefix(600);
    for (int m = 4; m <= 6; ++m) {
      for (int i = 1; i <= 3; ++i) {
        for (std::int64_t p = 1; p <= 2; ++p) {
          const SquareCaseSet set = square_case_set(i, m, p, word);
          if (set.positions.hi > 600) continue;
          for (std::int64_t q = set.positions.lo; q <= set.positions.hi; ++q) {
            const auto roots = oracle::square_roots_ending_at(prefix, q);
            CHECK(std::count(roots.begin(), roots.end(), set.root_length) == 1);
          }
        }
      }
    }
  }

  SUBCASE("cardinalities follow the case") {
    for (int m = 4; m <= 10; ++m) {
      const std::int64_t expected12 = (tri_number(m + 1) - 3 * tri_number(m - 1) - 1) / 2;
      const std::int64_t expected3 = (-tri_number(m - 2) + 5 * tri_number(m - 4) + 1) / 2;
      CHECK(square_case_set(1, m, 3, word).positions.size() == expected12);
      CHECK(square_case_set(2, m, 2, word).positions.size() == expected12);
      CHECK(square_case_set(3, m, 1, word).positions.size() == expected3);
    }
  }
}

TEST_CASE("distinct square delta") {
  const std::vector<int> expected{0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1};
  for (std::int64_t n = 1; n <= 20; ++n) {
    CHECK(distinct_square_delta(n) == expected[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(distinct_square_delta(8) == 1);
  CHECK(distinct_square_delta(9) == 0);
  CHECK(distinct_square_delta(16) == 1);
  CHECK_THROWS_AS(distinct_square_delta(0), DomainError);
}

TEST_CASE("distinct square count") {
  CHECK(distinct_square_count(20) == 7);
  for (std::int64_t n = 0; n <= 7; ++n) CHECK(distinct_square_count(n) == 0);
  CHECK(distinct_square_count(200) == 104);   // frozen from the brute-force scan
  CHECK(distinct_square_count(1000) == 462);  // frozen from the brute-force scan

  SUBCASE("closed form equals the running delta sum") {
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= 2000; ++n) {
      sum += distinct_square_delta(n);
      CHECK(distinct_square_count(n) == sum);
    }
  }

  SUBCASE("values at t_m") {
    for (int m = 3; m <= 12; ++m) {
      const std::int64_t expected = (2 * tri_number(m - 2) + tri_number(m - 3) +
                                     3 * tri_number(m - 4) - m - 5) /
                                    2;
      CHECK(distinct_square_count(tri_number(m)) == expected);
    }
  }
}

TEST_CASE("square diff vector") {
  const DiffVector v = square_diff_vector(200);
  CHECK(v.covered() >= 200);
  for (std::int64_t n = 1; n <= 7; ++n) CHECK(v.delta(n) == 0);
  CHECK(v.delta(8) == 1);   // the block [8] carries a single 1
  CHECK(v.delta(9) == 0);   // [9,10] -> 0,1
  CHECK(v.delta(10) == 1);
  const std::vector<std::uint32_t> w4{1, 0, 1, 0, 0, 1, 2};  // positions 21..27
  for (std::int64_t n = 21; n <= 27; ++n) {
    CHECK(v.delta(n) == w4[static_cast<std::size_t>(n - 21)]);
  }
  CHECK(v.delta(132) == 4);
  CHECK(v.delta(174) == 3);

  CHECK(v.prefix_sum(0) == 0);
  CHECK(v.prefix_sum(7) == 0);
  CHECK(v.prefix_sum(27) == 12);
  CHECK(repeated_square_count(7) == 0);
  CHECK(repeated_square_count(300) == 441);  // frozen from the brute-force scan
  CHECK_THROWS_AS(square_diff_vector(1000, 100), CapacityError);
}

TEST_CASE("prefix sums agree with the running delta total") {
  const DiffVector v = square_diff_vector(500);
  std::int64_t running = 0;
  for (std::int64_t n = 1; n <= 500; ++n) {
    running += v.delta(n);
    CHECK(v.prefix_sum(n) == running);  // exercises the block-boundary bisection
  }
  CHECK_THROWS_AS(v.prefix_sum(v.covered() + 1), DomainError);
}

TEST_CASE("square vector and delta match the brute-force scan") {
  const std::int64_t n_max = 800;
  const oracle::RepetitionScan scan = oracle::scan_repetitions(tri_prefix(n_max));
  const DiffVector v = square_diff_vector(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    CHECK(v.delta(n) == scan.squares_ending[idx]);
    CHECK(static_cast<std::uint32_t>(distinct_square_delta(n)) == scan.new_squares[idx]);
  }
}

TEST_CASE("first-occurrence sets chain upward") {
  const IndexedWord word = IndexedWord::tribonacci(50);
  for (int m = 4; m <= 12; ++m) {
    const Interval k1 = square_case_set(1, m, 1, word).positions;
    const Interval k2 = square_case_set(2, m, 1, word).positions;
    const Interval k3 = square_case_set(3, m, 1, word).positions;
    CHECK(k3.hi < k2.lo);
    CHECK(k2.hi < k1.lo);
    const Interval k3_next = square_case_set(3, m + 1, 1, word).positions;
    CHECK(k1.hi + 1 == k3_next.lo);
    CHECK(concat(k1, k3_next) ==
          Interval::closed(2 * tri_number(m - 1), tri_number(m) + 2 * tri_number(m - 3) - 1));
  }

  SUBCASE("the chain carries exactly the new-square positions") {
    for (int m = 4; m <= 8; ++m) {
      for (int i = 1; i <= 3; ++i) {
        const Interval set = square_case_set(i, m, 1, word).positions;
        for (std::int64_t q = set.lo; q <= set.hi; ++q) CHECK(distinct_square_delta(q) == 1);
      }
    }
  }
}

TEST_CASE("square length law") {
  // every square root length is t_k or t_k + t_{k-1}
  const std::string prefix = tri_prefix(2000);
  std::set<std::int64_t> allowed;
  for (int k = 0; k <= 16; ++k) {
    allowed.insert(tri_number(k));
    allowed.insert(tri_number(k) + tri_number(k - 1));
  }
  const std::int64_t n = static_cast<std::int64_t>(prefix.size());
  for (std::int64_t root = 1; 2 * root <= n; ++root) {
    std::int64_t run = 0;
    for (std::int64_t i = 0; i + root < n; ++i) {
      run = prefix[static_cast<std::size_t>(i)] == prefix[static_cast<std::size_t>(i + root)]
                ? run + 1
                : 0;
      if (run >= root) CHECK(allowed.count(root) == 1);
    }
  }
}

TEST_CASE("square trees") {
  const IndexedWord word = IndexedWord::tribonacci(400);
  const PowerTree t1 = square_tree(1, 8, word);
  CHECK(t1.nodes.size() == 25);
  CHECK(t1.nodes[0].positions == Interval::closed(162, 176));
  CHECK(t1.nodes[1].case_index == 1);
  CHECK(t1.nodes[1].order == 7);
  CHECK(t1.nodes[1].occurrence == 2);

  const PowerTree t2 = square_tree(2, 8, word);
  CHECK(t2.nodes.size() == 13);
  const PowerTree t3 = square_tree(3, 8, word);
  CHECK(t3.nodes.size() == 7);

  const auto multiplicity = [](const PowerTree& tree, std::int64_t pos) {
    std::int64_t count = 0;
    for (const TreeNode& node : tree.nodes) count += node.positions.contains(pos) ? 1 : 0;
    return count;
  };
  CHECK(multiplicity(t2, 132) == 4);
  CHECK(multiplicity(t1, 132) == 0);
  CHECK(multiplicity(t1, 174) == 3);

  for (int i = 1; i <= 3; ++i) CHECK(square_tree(i, 4, word).nodes.size() == 1);

  SUBCASE("leaves and interior nodes") {
    for (const PowerTree& tree : {t1, t2, t3}) {
      for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
        const TreeNode& node = tree.nodes[idx];
        const bool no_rule = node.order - node.case_index < 4;
        CHECK(tree.is_leaf(static_cast<int>(idx)) == no_rule);
      }
    }
  }

  SUBCASE("trees stay inside their enclosing interval and are disjoint") {
    std::vector<std::set<std::int64_t>> position_sets;
    for (int m = 4; m <= 9; ++m) {
      for (int i = 1; i <= 3; ++i) {
        const PowerTree tree = square_tree(i, m, word);
        const Interval gamma = square_gamma_set(i, m, 1, word);
        std::set<std::int64_t> positions;
        for (const TreeNode& node : tree.nodes) {
          CHECK(node.positions.lo >= gamma.lo);
          CHECK(node.positions.hi <= gamma.hi);
          for (std::int64_t q = node.positions.lo; q <= node.positions.hi; ++q) {
            positions.insert(q);
          }
        }
        for (const auto& other : position_sets) {
          for (std::int64_t q : positions) CHECK(other.count(q) == 0);
        }
        position_sets.push_back(std::move(positions));
      }
    }
  }
}

TEST_CASE("tree multiplicities equal the diff vector") {
  const IndexedWord word = IndexedWord::tribonacci(700);
  const DiffVector v = square_diff_vector(700);
  std::vector<std::uint32_t> mult(601, 0);
  std::int64_t covered_to = 7;  // positions 1..7 precede every block
  for (int m = 4;; ++m) {
    if (square_gamma_set(1, m, 1, word).hi > 600) break;  // gamma case 1 ends the triple
    for (int i = 3; i >= 1; --i) {
      const PowerTree tree = square_tree(i, m, word);
      for (const TreeNode& node : tree.nodes) {
        for (std::int64_t q = node.positions.lo; q <= node.positions.hi; ++q) {
          mult[static_cast<std::size_t>(q)] += 1;
        }
      }
      covered_to = square_gamma_set(i, m, 1, word).hi;
    }
  }
  REQUIRE(covered_to >= 300);
  for (std::int64_t n = 1; n <= covered_to; ++n) {
    CHECK(mult[static_cast<std::size_t>(n)] == v.delta(n));
  }
}

TEST_CASE("subtree counts embed into the full square sets") {
  // restricted to kernels of order <= m, position i of the p-th enclosing
  // interval sees exactly the squares the first interval sees at i
  const IndexedWord word = IndexedWord::tribonacci(600);
  const std::string prefix = tri_prefix(600);
  for (int m = 4; m <= 7; ++m) {
    for (int j = 1; j <= 3; ++j) {
      for (std::int64_t p = 1; p <= 4; ++p) {
        const Interval base = square_gamma_set(j, m, 1, word);
        const Interval shifted = square_gamma_set(j, m, p, word);
        REQUIRE(base.size() == shifted.size());
        for (std::int64_t i = 1; i <= base.size(); ++i) {
          const std::int64_t full_count =
              static_cast<std::int64_t>(oracle::square_roots_ending_at(prefix, base.at(i)).size());
          std::int64_t restricted = 0;
          for (std::int64_t root : oracle::square_roots_ending_at(prefix, shifted.at(i))) {
            const std::int64_t end = shifted.at(i);
            const std::string square(prefix.substr(static_cast<std::size_t>(end - 2 * root),
                                                   static_cast<std::size_t>(2 * root)));
            if (kernel_of(square).order <= m) ++restricted;
          }
          CHECK(full_count == restricted);
        }
      }
    }
  }
}

TEST_CASE("dot export") {
  const IndexedWord word = IndexedWord::tribonacci(400);
  const PowerTree single = square_tree(3, 4, word);
  CHECK(to_dot(single) ==
        "digraph power_tree {\n"
        "  rankdir=LR;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"K3(4,1) [8]\"];\n"
        "}\n");

  const std::string first = to_dot(square_tree(1, 8, word));
  const std::string second = to_dot(square_tree(1, 8, word));
  CHECK(first == second);  // byte-identical across runs

  std::size_t edges = 0;
  for (std::size_t at = 0; (at = first.find("->", at)) != std::string::npos; ++at) ++edges;
  CHECK(edges == 24);  // 25 nodes, one edge each except the root
  CHECK(first.find("[label=\"a\"]") != std::string::npos);
}
