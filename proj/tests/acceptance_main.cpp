// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Timing gates are enforced where stated.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tripow/alpha.hpp"
#include "tripow/cubes.hpp"
#include "tripow/oracle.hpp"
#include "tripow/power_tree.hpp"
#include "tripow/squares.hpp"
#include "tripow/words.hpp"

using namespace tripow;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS  " << index << ". " << name << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "FAIL  " << index << ". " << name << " -- " << e.what() << "\n";
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  criterion(1, "distinct squares for n=1..20, under 1 ms", [] {
    const std::vector<std::int64_t> expected{0, 0, 0, 0, 0, 0, 0, 1, 1, 2,
                                             2, 2, 2, 3, 4, 5, 5, 5, 6, 7};
    tri_number(24);  // warm the shared t-table before timing
    const auto start = Clock::now();
    std::vector<std::int64_t> got(20);
    for (std::int64_t n = 1; n <= 20; ++n) {
      got[static_cast<std::size_t>(n - 1)] = distinct_square_count(n);
    }
    const double elapsed = seconds_since(start);
    require(got == expected, "value table mismatch");
    require(elapsed < 0.001, "took " + std::to_string(elapsed) + " s");
  });

  criterion(2, "distinct cube fixtures", [] {
    require(distinct_cube_count(57) == 0, "C(57)");
    require(distinct_cube_count(58) == 1, "C(58)");
    require(distinct_cube_count(107) == 2, "C(107)");
    require(distinct_cube_count(108) == 3, "C(108)");
    require(distinct_cube_count(196) == 3, "C(196)");
    require(distinct_cube_count(199) == 6, "C(199)");
  });

  criterion(3, "repeated squares at t_24 and 5000000, under 5 s each", [] {
    auto start = Clock::now();
    const std::int64_t at_t24 = repeated_square_count(tri_number(24));
    const double first = seconds_since(start);
    require(at_t24 == 15795657, "B(t_24) = " + std::to_string(at_t24));
    require(first < 5.0, "t_24 took " + std::to_string(first) + " s");
    start = Clock::now();
    const std::int64_t at_5m = repeated_square_count(5000000);
    const double second = seconds_since(start);
    require(at_5m == 32561325, "B(5000000) = " + std::to_string(at_5m));
    require(second < 5.0, "5000000 took " + std::to_string(second) + " s");
  });

  criterion(4, "repeated cubes at t_24 and 5000000, under 5 s each", [] {
    auto start = Clock::now();
    const std::int64_t at_t24 = repeated_cube_count(tri_number(24));
    const double first = seconds_since(start);
    require(at_t24 == 819290, "D(t_24) = " + std::to_string(at_t24));
    require(first < 5.0, "t_24 took " + std::to_string(first) + " s");
    start = Clock::now();
    const std::int64_t at_5m = repeated_cube_count(5000000);
    const double second = seconds_since(start);
    require(at_5m == 1699525, "D(5000000) = " + std::to_string(at_5m));
    require(second < 5.0, "5000000 took " + std::to_string(second) + " s");
  });

  criterion(5, "oracle differential for n <= 5000, under 60 s", [] {
    const auto start = Clock::now();
    const std::int64_t n_max = 5000;
    const std::string prefix = tri_prefix(n_max);
    const oracle::RepetitionScan scan = oracle::scan_repetitions(prefix, n_max);
    const DiffVector squares = square_diff_vector(n_max);
    const DiffVector cubes = cube_diff_vector(n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      require(static_cast<std::uint32_t>(distinct_square_delta(n)) == scan.new_squares[idx],
              "a(n) mismatch at n=" + std::to_string(n));
      require(squares.delta(n) == scan.squares_ending[idx],
              "b(n) mismatch at n=" + std::to_string(n));
      require(static_cast<std::uint32_t>(distinct_cube_delta(n)) == scan.new_cubes[idx],
              "c(n) mismatch at n=" + std::to_string(n));
      require(cubes.delta(n) == scan.cubes_ending[idx],
              "d(n) mismatch at n=" + std::to_string(n));
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  });

  criterion(6, "pointwise fixtures for the difference vectors", [] {
    const DiffVector squares = square_diff_vector(200);
    require(squares.delta(132) == 4, "b(132)");
    require(squares.delta(174) == 3, "b(174)");
    const DiffVector cubes = cube_diff_vector(200);
    for (std::int64_t n = 52; n <= 95; ++n) {
      require(cubes.delta(n) == (n == 58 ? 1u : 0u), "d over [52..95] at " + std::to_string(n));
    }
    for (std::int64_t n = 96; n <= 176; ++n) {
      const bool one = n == 107 || n == 108 || n == 139;
      require(cubes.delta(n) == (one ? 1u : 0u), "d over [96..176] at " + std::to_string(n));
    }
  });

  criterion(7, "length laws and exponent bounds for n <= 5000", [] {
    const std::string prefix = tri_prefix(5000);
    const std::int64_t n = static_cast<std::int64_t>(prefix.size());
    std::set<std::int64_t> square_roots;
    std::set<std::int64_t> cube_roots;
    for (int k = 0; k <= 20; ++k) {
      square_roots.insert(tri_number(k));
      square_roots.insert(tri_number(k) + tri_number(k - 1));
      if (k >= 3) cube_roots.insert(tri_number(k));
    }
    Rational top(0, 1);
    for (std::int64_t root = 1; root < n; ++root) {
      std::int64_t run = 0;
      for (std::int64_t i = 0; i + root < n; ++i) {
        run = prefix[static_cast<std::size_t>(i)] ==
                      prefix[static_cast<std::size_t>(i + root)]
                  ? run + 1
                  : 0;
        if (run >= root) {
          require(square_roots.count(root) == 1,
                  "square root length " + std::to_string(root));
        }
        if (run >= 2 * root) {
          require(cube_roots.count(root) == 1, "cube root length " + std::to_string(root));
        }
        if (run >= 1) {
          const Rational exponent(run + root, root);
          if (exponent > top) top = exponent;
        }
      }
    }
    require(top < Rational(31915, 10000), "max exponent " + top.str());
    require(top < Rational(4, 1), "fourth power found: " + top.str());
  });

  criterion(8, "letter-count identities to p=500; kernel positions vs scan to n=5000", [] {
    const IndexedWord word = IndexedWord::tribonacci(6000);
    for (std::int64_t p = 1; p <= 500; ++p) {
      const std::int64_t a_p = letter_end_position('a', p, word);
      const std::int64_t b_p = letter_end_position('b', p, word);
      const std::int64_t c_p = letter_end_position('c', p, word);
      require(word.counts(a_p).a == p, "a-count at p=" + std::to_string(p));
      require(word.counts(b_p).b == p, "b-count at p=" + std::to_string(p));
      require(word.counts(c_p).c == p, "c-count at p=" + std::to_string(p));
      require(word.counts(b_p).a == a_p, "a-count through b_p at p=" + std::to_string(p));
      require(word.counts(c_p).a == b_p, "a-count through c_p at p=" + std::to_string(p));
      require(word.counts(c_p).b == a_p, "b-count through c_p at p=" + std::to_string(p));
    }
    const std::string prefix = tri_prefix(5000);
    const IndexedWord indexed(prefix);
    for (int m = 1; m <= 8; ++m) {
      const auto ends = occurrences(kernel_word(m).word, prefix);
      require(!ends.empty(), "no occurrences at order " + std::to_string(m));
      for (std::size_t p = 0; p < ends.size(); ++p) {
        require(kernel_position(m, static_cast<std::int64_t>(p + 1), indexed) == ends[p],
                "kernel position (" + std::to_string(m) + "," + std::to_string(p + 1) + ")");
      }
    }
  });

  criterion(9, "tree multiplicities match the vectors over [1..2000]", [] {
    const IndexedWord word = IndexedWord::tribonacci(2100);
    const std::int64_t limit = 2000;

    const DiffVector squares = square_diff_vector(limit);
    std::vector<std::uint32_t> mult(static_cast<std::size_t>(limit + 1), 0);
    std::int64_t covered = 7;
    for (int m = 4;; ++m) {
      if (square_gamma_set(3, m, 1, word).hi > limit) break;
      for (int i = 3; i >= 1; --i) {
        if (square_gamma_set(i, m, 1, word).hi > limit) break;
        for (const TreeNode& node : square_tree(i, m, word).nodes) {
          for (std::int64_t q = node.positions.lo; q <= node.positions.hi; ++q) {
            mult[static_cast<std::size_t>(q)] += 1;
          }
        }
        covered = square_gamma_set(i, m, 1, word).hi;
      }
    }
    require(covered >= 1500, "square trees cover only " + std::to_string(covered));
    for (std::int64_t q = 1; q <= covered; ++q) {
      require(mult[static_cast<std::size_t>(q)] == squares.delta(q),
              "square multiplicity at " + std::to_string(q));
    }

    const DiffVector cubes = cube_diff_vector(limit);
    std::vector<std::uint32_t> cube_mult(static_cast<std::size_t>(limit + 1), 0);
    std::int64_t cube_covered = 51;
    for (int m = 7; cube_gamma_set(m, 1, word).hi <= limit; ++m) {
      for (const TreeNode& node : cube_tree(m, word).nodes) {
        for (std::int64_t q = node.positions.lo; q <= node.positions.hi; ++q) {
          cube_mult[static_cast<std::size_t>(q)] += 1;
        }
      }
      cube_covered = cube_gamma_set(m, 1, word).hi;
    }
    require(cube_covered >= 1000, "cube trees cover only " + std::to_string(cube_covered));
    for (std::int64_t q = 1; q <= cube_covered; ++q) {
      require(cube_mult[static_cast<std::size_t>(q)] == cubes.delta(q),
              "cube multiplicity at " + std::to_string(q));
    }
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed\n";
  return 1;
}
