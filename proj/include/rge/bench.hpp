#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace rge {

struct BenchConfig {
  std::vector<int> graph_counts{8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
  std::vector<int> node_counts{8, 16, 32, 64, 128, 256, 512, 1024};
  int nodes_for_graph_sweep = 100;
  int graphs_for_node_sweep = 64;
  int d = 6;
  int R = 128;
  int d_max = 10;
  double gamma = 1.0;
  std::uint64_t seed = 1;
  int threads = 1;
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct BenchRow {
  std::string axis;  // "N" or "n"
  int value = 0;
  int graphs = 0;
  int nodes = 0;
  double eigensolve_seconds = 0.0;
  double embedding_seconds = 0.0;
  double total_seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  bool aborted = false;  // budget exhausted before the sweep finished
};

// Sweeps N at fixed n, then n at fixed N, over synthetic datasets. Stops
// with partial results once max_seconds of wall time have elapsed.
BenchResult run_bench(const BenchConfig& config);

// Least-squares slope of log(y) against log(x); needs two distinct x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

enum class BenchTiming { Eigensolve, Features, Total };

// Slope of the chosen timing against the axis value over the rows of `axis`
// whose value lies in [lo, hi].
double timing_slope(const BenchResult& result, const std::string& axis, int lo, int hi,
                    BenchTiming timing = BenchTiming::Total);

void write_bench(std::ostream& out, const BenchResult& result);

}  // namespace rge
