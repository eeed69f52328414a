#include "tripow/oracle.hpp"

#include <algorithm>
#include <ostream>

#include "tripow/errors.hpp"

namespace tripow::oracle {

namespace {

void check_position(std::string_view word, std::int64_t n) {
  if (n < 1 || n > static_cast<std::int64_t>(word.size())) {
    throw DomainError("oracle: position " + std::to_string(n) + " outside the word");
  }
}

void check_budget(std::string_view word, std::int64_t budget) {
  if (static_cast<std::int64_t>(word.size()) > budget) {
    throw CapacityError("oracle: word length " + std::to_string(word.size()) +
                        " exceeds quadratic-scan budget " + std::to_string(budget));
  }
}

}  // namespace

std::vector<std::int64_t> square_roots_ending_at(std::string_view word, std::int64_t n) {
  check_position(word, n);
  std::vector<std::int64_t> roots;
  for (std::int64_t len = 1; 2 * len <= n; ++len) {
    const auto first = word.substr(static_cast<std::size_t>(n - 2 * len),
                                   static_cast<std::size_t>(len));
    const auto second = word.substr(static_cast<std::size_t>(n - len),
                                    static_cast<std::size_t>(len));
    if (first == second) roots.push_back(len);
  }
  return roots;
}

std::int64_t squares_ending_at(std::string_view word, std::int64_t n) {
  return static_cast<std::int64_t>(square_roots_ending_at(word, n).size());
}

std::vector<std::int64_t> cube_roots_ending_at(std::string_view word, std::int64_t n) {
  check_position(word, n);
  std::vector<std::int64_t> roots;
  for (std::int64_t len = 1; 3 * len <= n; ++len) {
    const auto a = word.substr(static_cast<std::size_t>(n - 3 * len),
                               static_cast<std::size_t>(len));
    const auto b = word.substr(static_cast<std::size_t>(n - 2 * len),
                               static_cast<std::size_t>(len));
    const auto c = word.substr(static_cast<std::size_t>(n - len),
                               static_cast<std::size_t>(len));
    if (a == b && b == c) roots.push_back(len);
  }
  return roots;
}

std::int64_t cubes_ending_at(std::string_view word, std::int64_t n) {
  return static_cast<std::int64_t>(cube_roots_ending_at(word, n).size());
}

RepetitionScan scan_repetitions(std::string_view word, std::int64_t budget) {
  check_budget(word, budget);
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  RepetitionScan scan;
  scan.squares_ending.assign(static_cast<std::size_t>(n + 1), 0);
  scan.cubes_ending.assign(static_cast<std::size_t>(n + 1), 0);
  scan.new_squares.assign(static_cast<std::size_t>(n + 1), 0);
  scan.new_cubes.assign(static_cast<std::size_t>(n + 1), 0);
  scan.max_exponent.assign(static_cast<std::size_t>(n + 1), Rational(1, 1));

  std::vector<std::int64_t> first_squares;  // 0-based starts of distinct words, per root
  std::vector<std::int64_t> first_cubes;
  for (std::int64_t len = 1; len < n; ++len) {
    first_squares.clear();
    first_cubes.clear();
    std::int64_t run = 0;  // consecutive i with word[i] == word[i+len], ending at i
    for (std::int64_t i = 0; i + len < n; ++i) {
      run = (word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>(i + len)])
                ? run + 1
                : 0;
      if (run == 0) continue;
      const std::int64_t end = i + len + 1;  // 1-based position of the repetition's last letter
      // longest suffix ending at `end` with period `len` has run+len letters
      const Rational exponent(run + len, len);
      if (exponent > scan.max_exponent[static_cast<std::size_t>(end)]) {
        scan.max_exponent[static_cast<std::size_t>(end)] = exponent;
      }
      if (run >= len) {
        scan.squares_ending[static_cast<std::size_t>(end)] += 1;
        const std::int64_t start = i - len + 1;  // 0-based start of the square
        const auto sq = word.substr(static_cast<std::size_t>(start),
                                    static_cast<std::size_t>(2 * len));
        const bool seen = std::any_of(
            first_squares.begin(), first_squares.end(), [&](std::int64_t f) {
              return word.substr(static_cast<std::size_t>(f),
                                 static_cast<std::size_t>(2 * len)) == sq;
            });
        if (!seen) {
          first_squares.push_back(start);
          scan.new_squares[static_cast<std::size_t>(end)] += 1;
        }
      }
      if (run >= 2 * len) {
        scan.cubes_ending[static_cast<std::size_t>(end)] += 1;
        const std::int64_t start = i - 2 * len + 1;
        const auto cb = word.substr(static_cast<std::size_t>(start),
                                    static_cast<std::size_t>(3 * len));
        const bool seen = std::any_of(
            first_cubes.begin(), first_cubes.end(), [&](std::int64_t f) {
              return word.substr(static_cast<std::size_t>(f),
                                 static_cast<std::size_t>(3 * len)) == cb;
            });
        if (!seen) {
          first_cubes.push_back(start);
          scan.new_cubes[static_cast<std::size_t>(end)] += 1;
        }
      }
    }
  }
  return scan;
}

std::int64_t distinct_squares(std::string_view word, std::int64_t n, std::int64_t budget) {
  if (n < 0 || n > static_cast<std::int64_t>(word.size())) {
    throw DomainError("distinct_squares: n outside the word");
  }
  const RepetitionScan scan = scan_repetitions(word.substr(0, static_cast<std::size_t>(n)),
                                               budget);
  std::int64_t total = 0;
  for (std::uint32_t v : scan.new_squares) total += v;
  return total;
}

std::int64_t distinct_cubes(std::string_view word, std::int64_t n, std::int64_t budget) {
  if (n < 0 || n > static_cast<std::int64_t>(word.size())) {
    throw DomainError("distinct_cubes: n outside the word");
  }
  const RepetitionScan scan = scan_repetitions(word.substr(0, static_cast<std::size_t>(n)),
                                               budget);
  std::int64_t total = 0;
  for (std::uint32_t v : scan.new_cubes) total += v;
  return total;
}

Rational max_exponent(std::string_view word, std::int64_t budget) {
  const RepetitionScan scan = scan_repetitions(word, budget);
  Rational best(0, 1);
  for (const Rational& r : scan.max_exponent) {
    if (r > best) best = r;
  }
  return best;
}

void write_baseline_csv(std::ostream& out, const RepetitionScan& scan) {
  out << "n,squares_ending,new_squares,cubes_ending,new_cubes,max_exp_num,max_exp_den\n";
  for (std::size_t n = 1; n < scan.squares_ending.size(); ++n) {
    out << n << ',' << scan.squares_ending[n] << ',' << scan.new_squares[n] << ','
        << scan.cubes_ending[n] << ',' << scan.new_cubes[n] << ','
        << scan.max_exponent[n].num() << ',' << scan.max_exponent[n].den() << '\n';
  }
}

}  // namespace tripow::oracle
