#ifndef INTAPPROX_TOOLS_CLI_HPP
#define INTAPPROX_TOOLS_CLI_HPP

// Command-line front end. Kept in a header so tests can drive it with string
// streams instead of spawning processes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intapprox/intapprox.hpp"

namespace intapprox::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kMismatch = 3 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(ParseError::Kind::Syntax, 0, "cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
}

inline FieldSpec field_flag(std::uint32_t p) {
  try {
    return FieldSpec(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

inline void require_ss(const std::string& method) {
  if (method != "ss") {
    throw UsageError("--method " + method +
                     " is not available: cc and tot are only defined here for rectangles; use --method ss");
  }
}

// Rank and dimension-vector preservation of the approximation.
inline int verify(const PersistenceModule& mod, unsigned threads, std::string& report) {
  const SignedIntervalSum sum = interval_approximation(mod, threads);
  const VertexFunction dims = dimension_vector(mod);
  const VertexFunction sum_dims = dimvec_of_sum(sum);
  std::size_t pairs = 0, bad_pairs = 0;
  for (const auto& [pair, r] : rank_invariant(mod)) {
    ++pairs;
    if (rank_of_sum(sum, pair.first, pair.second) != static_cast<std::int64_t>(r)) ++bad_pairs;
  }
  const bool ok = bad_pairs == 0 && dims == sum_dims;
  report = "dimvec " + dims.to_string() + "\n";
  report += "dimvec_of_sum " + sum_dims.to_string() + "\n";
  report += "rank pairs " + std::to_string(pairs) + " checked, " + std::to_string(bad_pairs) + " mismatched\n";
  report += ok ? "verify: ok\n" : "verify: MISMATCH\n";
  return ok ? kOk : kMismatch;
}

}  // namespace detail

/// Runs the tool on args (without the program name). Returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval approximation of persistence modules over commutative grids", "intapprox"};
  app.require_subcommand(1);

  unsigned threads = 0;
  std::string output;
  std::string method = "ss";
  std::string input = "-";

  auto* intervals = app.add_subcommand("intervals", "List the intervals of the m x n grid in canonical order");
  int im = 0, in_ = 0;
  bool count_only = false;
  intervals->add_option("m", im, "rows")->required()->check(CLI::Range(1, 24));
  intervals->add_option("n", in_, "columns")->required()->check(CLI::Range(1, 24));
  intervals->add_flag("--count", count_only, "print only the number of intervals");
  intervals->add_option("--output", output, "write to this file instead of stdout");

  auto* compress = app.add_subcommand("compress", "Compressed multiplicity of every interval");
  auto* approx = app.add_subcommand("approx", "Signed interval approximation");
  auto* verify = app.add_subcommand("verify", "Check rank and dimension-vector preservation");
  for (CLI::App* sub : {compress, approx, verify}) {
    sub->add_option("input", input, "PMOD file, '-' for stdin")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--output", output, "write to this file instead of stdout");
  }
  for (CLI::App* sub : {compress, approx}) {
    sub->add_option("--method", method, "compression (ss; cc and tot only for rectangles)")
        ->check(CLI::IsMember({"ss", "cc", "tot"}))
        ->capture_default_str();
  }

  auto* gen = app.add_subcommand("gen", "Write a generated module as PMOD");
  std::string kind;
  int gm = 2, gn = 4;
  std::size_t gd = 2, gk = 3, gl = 1;
  std::uint64_t seed = 1;
  std::uint32_t p = 2;
  bool disguise = false;
  gen->add_option("kind", kind, "random | decomposable | buchet | example")
      ->required()
      ->check(CLI::IsMember({"random", "decomposable", "buchet", "example"}));
  gen->add_option("--m", gm, "rows (decomposable)")->check(CLI::Range(1, 2))->capture_default_str();
  gen->add_option("--n", gn, "columns (random, decomposable)")->check(CLI::Range(1, 256))->capture_default_str();
  gen->add_option("--d", gd, "space dimension (random)")->check(CLI::Range(0, 4096))->capture_default_str();
  gen->add_option("--k", gk, "summand count (decomposable)")->capture_default_str();
  gen->add_option("--l", gl, "block size (buchet)")->check(CLI::Range(1, 4096))->capture_default_str();
  gen->add_flag("--disguise", disguise, "random change of basis (decomposable)");
  gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  gen->add_option("--field", p, "prime modulus")->capture_default_str();
  gen->add_option("--output", output, "write to this file instead of stdout");

  auto* bench = app.add_subcommand("bench", "Time the compression and inversion pipeline, CSV output");
  BenchOptions bopt;
  bopt.threads = 1;
  bench->add_option("--n", bopt.n_values, "column counts")->delimiter(',')->capture_default_str();
  bench->add_option("--d", bopt.d_values, "space dimensions")->delimiter(',')->capture_default_str();
  bench->add_option("--reps", bopt.min_reps, "minimum repetitions per cell")->capture_default_str();
  bench->add_option("--seed", bopt.seed, "PRNG seed")->capture_default_str();
  bench->add_option("--threads", bopt.threads, "worker threads (0 = all cores)")->capture_default_str();
  bench->add_option("--field", p, "prime modulus")->capture_default_str();
  bench->add_option("--output", output, "write to this file instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (intervals->parsed()) {
      const auto all = enumerate_intervals(im, in_);
      std::string text;
      if (count_only) {
        text = std::to_string(all.size()) + "\n";
      } else {
        for (const Interval& iv : all) text += iv.to_string() + "\n";
      }
      detail::write_output(output, text, out);
      return kOk;
    }
    if (compress->parsed() || approx->parsed() || verify->parsed()) {
      if (!verify->parsed()) detail::require_ss(method);
      const PersistenceModule mod = parse_pmod(detail::read_input(input, in));
      if (mod.grid().m > 2) {
        throw UnsupportedError("ss-compressed multiplicities are implemented for grids with at most two rows");
      }
      std::string text;
      int code = kOk;
      if (compress->parsed()) {
        text = compressed_multiplicity_function(mod, threads).format();
      } else if (approx->parsed()) {
        text = interval_approximation(mod, threads).format();
      } else {
        code = detail::verify(mod, threads, text);
      }
      detail::write_output(output, text, out);
      return code;
    }
    if (gen->parsed()) {
      const FieldSpec field = detail::field_flag(p);
      Rng rng(seed);
      PersistenceModule mod;
      if (kind == "random") {
        mod = random_module(gn, gd, field, rng);
      } else if (kind == "decomposable") {
        mod = random_interval_decomposable(gm, gn, gk, field, rng, disguise).module;
      } else if (kind == "buchet") {
        mod = buchet_module(gl, field);
      } else {
        mod = example_negativedtilde(field);
      }
      detail::write_output(output, print_pmod(mod), out);
      return kOk;
    }
    if (bench->parsed()) {
      bopt.field = detail::field_flag(p);
      detail::write_output(output, bench_csv(run_bench(bopt)), out);
      return kOk;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace intapprox::cli

#endif  // INTAPPROX_TOOLS_CLI_HPP
