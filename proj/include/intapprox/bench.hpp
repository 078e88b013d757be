#ifndef INTAPPROX_BENCH_HPP
#define INTAPPROX_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "intapprox/compression.hpp"
#include "intapprox/field.hpp"
#include "intapprox/generators.hpp"
#include "intapprox/interval_poset.hpp"
#include "intapprox/linalg.hpp"
#include "intapprox/mobius.hpp"

namespace intapprox {

struct BenchCell {
  int n = 0;
  std::size_t d = 0;
  std::size_t reps = 0;
  double total_ms = 0;
  double mean_ms = 0;
  std::size_t intervals = 0;      // per repetition
  std::size_t path_products = 0;  // per repetition
  std::size_t path_pairs = 0;     // per repetition
};

struct BenchOptions {
  std::vector<int> n_values{4, 8, 16};
  std::vector<std::size_t> d_values{100};
  std::size_t min_reps = 5;
  double min_total_ms = 100.0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  FieldSpec field{};
};

/// Times the compressed multiplicity function plus its Möbius inversion on
/// random modules. Module generation and the interval list are built outside
/// the timed region. Each cell runs at least min_reps repetitions and keeps
/// going until their total reaches min_total_ms.
inline std::vector<BenchCell> run_bench(const BenchOptions& opt) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchCell> out;
  Rng rng(opt.seed);
  for (std::size_t d : opt.d_values) {
    for (int n : opt.n_values) {
      IntervalCatalog::shared(2, n);
      BenchCell cell{n, d, 0, 0, 0, 0, 0, 0};
      while (cell.reps < opt.min_reps || cell.total_ms < opt.min_total_ms) {
        const PersistenceModule mod = random_module(n, d, opt.field, rng);
        PipelineStats stats;
        const auto start = Clock::now();
        const IntervalFunction dbar = compressed_multiplicity_function(mod, opt.threads, &stats);
        const IntervalFunction dtilde = mobius_invert(dbar, opt.threads);
        const auto stop = Clock::now();
        cell.total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
        ++cell.reps;
        cell.intervals = stats.intervals;
        cell.path_products = stats.path_products;
        cell.path_pairs = stats.path_pairs;
        if (dtilde.size() != dbar.size()) throw std::logic_error("bench: inversion changed the domain");
      }
      cell.mean_ms = cell.total_ms / static_cast<double>(cell.reps);
      out.push_back(cell);
    }
  }
  return out;
}

inline std::string bench_csv(const std::vector<BenchCell>& cells) {
  std::string out = "n,d,reps,mean_ms,total_ms,intervals,path_products,path_pairs\n";
  char buf[64];
  for (const BenchCell& c : cells) {
    out += std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.reps) + ",";
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", c.mean_ms, c.total_ms);
    out += buf;
    out += "," + std::to_string(c.intervals) + "," + std::to_string(c.path_products) + "," +
           std::to_string(c.path_pairs) + "\n";
  }
  return out;
}

}  // namespace intapprox

#endif  // INTAPPROX_BENCH_HPP
