// tripow: distinct/repeated square, cube and alpha-power counts in prefixes
// of the Tribonacci word. Positions and n are 1-indexed in every subcommand.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tripow/alpha.hpp"
#include "tripow/cubes.hpp"
#include "tripow/oracle.hpp"
#include "tripow/power_tree.hpp"
#include "tripow/report.hpp"
#include "tripow/squares.hpp"
#include "tripow/words.hpp"

namespace {

std::int64_t prefix_cap_from_env() {
  const char* raw = std::getenv("TRIPOW_MAX_PREFIX");
  if (raw == nullptr) return tripow::kDefaultPrefixCap;
  try {
    const std::int64_t cap = std::stoll(raw);
    if (cap < 0) throw std::invalid_argument("negative");
    return cap;
  } catch (const std::exception&) {
    throw tripow::DomainError(std::string("TRIPOW_MAX_PREFIX: bad value '") + raw + "'");
  }
}

// Writes to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw tripow::CapacityError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::int64_t n = 0;
  std::int64_t from = 1;
  std::int64_t to = 1;
  std::int64_t verify_max = 2000;
  std::string kind = "square";
  std::string mode = "distinct";
  std::string format = "csv";
  std::string alpha = "2";
  std::string out_path;
  int tree_case = 0;
  int order = 0;
};

int run_gen(const Options& opt) {
  OutputTarget out(opt.out_path);
  out.stream() << tripow::tri_prefix(opt.n, prefix_cap_from_env()) << '\n';
  return 0;
}

int run_count(const Options& opt) {
  std::int64_t value = 0;
  if (opt.kind == "square") {
    value = (opt.mode == "distinct") ? tripow::distinct_square_count(opt.n)
                                     : tripow::repeated_square_count(opt.n);
  } else {
    value = (opt.mode == "distinct") ? tripow::distinct_cube_count(opt.n)
                                     : tripow::repeated_cube_count(opt.n);
  }
  OutputTarget out(opt.out_path);
  out.stream() << value << '\n';
  return 0;
}

int run_table(const Options& opt) {
  const auto rows = tripow::count_table(opt.from, opt.to);
  OutputTarget out(opt.out_path);
  if (opt.format == "json") {
    tripow::write_count_json(out.stream(), rows);
  } else {
    tripow::write_count_csv(out.stream(), rows);
  }
  return 0;
}

int run_tree(const Options& opt) {
  const bool square = opt.kind == "square";
  if (square && (opt.tree_case < 1 || opt.tree_case > 3)) {
    throw tripow::DomainError("tree: square trees need --case 1|2|3");
  }
  if (!square && opt.tree_case != 0) {
    throw tripow::DomainError("tree: --case only applies to square trees");
  }
  if (square && opt.order < 4) throw tripow::DomainError("tree: square orders start at 4");
  if (!square && opt.order < 7) throw tripow::DomainError("tree: cube orders start at 7");
  if (opt.order > 20) throw tripow::DomainError("tree: orders above 20 are not supported");
  // every node position lies inside the root's enclosing interval
  const std::int64_t reach = tripow::half_exact(tripow::tri_number(opt.order + 1) +
                                                tripow::tri_number(opt.order - 1) - 3);
  const auto word = tripow::IndexedWord::tribonacci(reach, prefix_cap_from_env());
  const tripow::PowerTree tree = square ? tripow::square_tree(opt.tree_case, opt.order, word)
                                        : tripow::cube_tree(opt.order, word);
  OutputTarget out(opt.out_path);
  out.stream() << tripow::to_dot(tree);
  return 0;
}

int run_powers(const Options& opt) {
  const tripow::Rational alpha = tripow::Rational::parse(opt.alpha);
  const auto occurrences =
      tripow::alpha_power_positions(alpha, opt.n, prefix_cap_from_env());
  OutputTarget out(opt.out_path);
  if (opt.format == "json") {
    tripow::write_powers_json(out.stream(), alpha, occurrences);
  } else {
    tripow::write_powers_csv(out.stream(), occurrences);
  }
  return 0;
}

int run_verify(const Options& opt) {
  const std::int64_t max_n = opt.verify_max;
  if (max_n < 1) throw tripow::DomainError("verify: --max must be >= 1");
  const std::string prefix = tripow::tri_prefix(max_n, prefix_cap_from_env());
  const auto scan = tripow::oracle::scan_repetitions(prefix, max_n);
  const tripow::DiffVector squares = tripow::square_diff_vector(max_n);
  const tripow::DiffVector cubes = tripow::cube_diff_vector(max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto report = [&](const char* name, std::int64_t formula, std::int64_t oracle) {
      std::cout << "mismatch at n=" << n << ": " << name << " formula=" << formula
                << " oracle=" << oracle << '\n';
    };
    const auto idx = static_cast<std::size_t>(n);
    if (tripow::distinct_square_delta(n) != static_cast<int>(scan.new_squares[idx])) {
      report("a(n)", tripow::distinct_square_delta(n), scan.new_squares[idx]);
      return 1;
    }
    if (squares.delta(n) != scan.squares_ending[idx]) {
      report("b(n)", squares.delta(n), scan.squares_ending[idx]);
      return 1;
    }
    if (tripow::distinct_cube_delta(n) != static_cast<int>(scan.new_cubes[idx])) {
      report("c(n)", tripow::distinct_cube_delta(n), scan.new_cubes[idx]);
      return 1;
    }
    if (cubes.delta(n) != scan.cubes_ending[idx]) {
      report("d(n)", cubes.delta(n), scan.cubes_ending[idx]);
      return 1;
    }
  }
  std::cout << "verify: n=1.." << max_n << " a,b,c,d all match the brute-force scan\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repetition counts in Tribonacci word prefixes (1-indexed positions)"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "print the length-N prefix as raw text");
  gen->add_option("N", opt.n, "prefix length")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--out", opt.out_path, "write to file instead of stdout");

  auto* count = app.add_subcommand("count", "single distinct/repeated count");
  count->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"square", "cube"}));
  count->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"distinct", "repeated"}));
  count->add_option("--n", opt.n, "prefix length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--out", opt.out_path);

  auto* table = app.add_subcommand("table", "rows n,a,A,b,B,c,C,d,D over a range");
  table->add_option("--from", opt.from)->required()->check(CLI::PositiveNumber);
  table->add_option("--to", opt.to)->required()->check(CLI::PositiveNumber);
  table->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", opt.out_path);

  auto* tree = app.add_subcommand("tree", "case-set tree as a DOT digraph");
  tree->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"square", "cube"}));
  tree->add_option("--case", opt.tree_case, "square case index 1..3");
  tree->add_option("--order", opt.order)->required();
  tree->add_option("--format", opt.format)->check(CLI::IsMember({"dot"}));
  tree->add_option("--out", opt.out_path);

  auto* powers = app.add_subcommand("powers", "ending positions of alpha-powers");
  powers->add_option("--alpha", opt.alpha, "exponent P/Q, at least 2")->required();
  powers->add_option("--n", opt.n, "position limit")->required()->check(CLI::PositiveNumber);
  powers->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  powers->add_option("--out", opt.out_path);

  auto* verify = app.add_subcommand("verify", "differential run against the brute-force scan");
  verify->add_option("--max", opt.verify_max, "check n = 1..max (default 2000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(opt);
    if (count->parsed()) return run_count(opt);
    if (table->parsed()) return run_table(opt);
    if (tree->parsed()) return run_tree(opt);
    if (powers->parsed()) return run_powers(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const tripow::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 1;
  } catch (const tripow::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
