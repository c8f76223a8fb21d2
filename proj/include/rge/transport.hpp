#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rge/graph.hpp"
#include "rge/spectral.hpp"

namespace rge {

struct TransportProblem {
  Eigen::VectorXd source_weights;  // n_x, sums to 1
  Eigen::VectorXd sink_weights;    // n_y, sums to 1
  Eigen::MatrixXd cost;            // n_x x n_y, non-negative
};

// Optimal flow of a TransportProblem together with a dual certificate:
// source_potentials(i) + sink_potentials(j) <= cost(i, j) everywhere, with
// equality wherever flow(i, j) > 0, so the dual objective equals `objective`.
struct TransportPlan {
  Eigen::MatrixXd flow;
  double objective = 0.0;
  Eigen::VectorXd source_potentials;
  Eigen::VectorXd sink_potentials;
};

// Euclidean distance between two embedding rows of equal width d, or sqrt(d)
// when both labels are present and differ. Exactly one label present is a
// PreconditionError.
double ground_distance(std::span<const double> a, std::span<const double> b,
                       std::optional<Label> label_a = std::nullopt,
                       std::optional<Label> label_b = std::nullopt);

// Exact earth mover's distance by successive shortest paths. Masses are
// snapped to an integer grid (tol::kMassScale units per unit mass, the
// largest entry absorbing the rounding) so augmentations are exact and the
// result is deterministic. The smaller side is treated as the sink side and
// shortest paths run over sinks only: a residual path between two sinks runs
// through a source that already ships to the first one, and for each ordered
// sink pair the cheapest such source is kept in a lazily invalidated heap.
// A solve with n sources and D sinks costs O(n D^2 log n).
//
// Instances are not thread-safe; keep one per thread and reuse it, as its
// workspace is retained between calls.
class TransportSolver {
 public:
  // Objective only; skips building the flow matrix.
  double solve_objective(std::span<const double> source_weights, std::span<const double> sink_weights,
                         const Eigen::Ref<const Eigen::MatrixXd>& cost);

  TransportPlan solve(const TransportProblem& problem);

 private:
  struct HeapEntry {
    double key;
    std::int32_t source;
    std::int32_t generation;
  };

  void run(std::span<const double> source_weights, std::span<const double> sink_weights,
           const Eigen::Ref<const Eigen::MatrixXd>& cost);
  void add_flow(int source, int sink, std::int64_t amount);
  void push_exchanges(int source, int sink);

  // Problem in solver orientation: rows are sources, columns sinks; zero-mass
  // rows and columns are removed.
  bool transposed_ = false;
  std::vector<int> source_index_;
  std::vector<int> sink_index_;
  int sources_ = 0;
  int sinks_ = 0;
  std::vector<double> cost_;          // sources_ x sinks_, row-major
  std::vector<std::int64_t> supply_;
  std::vector<std::int64_t> residual_;  // remaining sink capacity
  std::vector<std::int64_t> flow_;      // sources_ x sinks_
  std::vector<std::int32_t> generation_;
  std::vector<std::vector<HeapEntry>> exchange_;  // sinks_ x sinks_ heaps
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<int> prev_;
  std::vector<int> via_;
  std::vector<std::pair<int, int>> path_;
  std::vector<char> settled_;
};

TransportPlan emd(const TransportProblem& problem);

// n_x x n_y matrix of ground distances between the rows of two embeddings.
// Labels are used when both sides carry them; one labeled side is an error.
Eigen::MatrixXd ground_cost_matrix(const NodeEmbeddings& x, const NodeEmbeddings& y);

// EMD between two embedded graphs under their nBOW weights.
double emd_between_graphs(const NodeEmbeddings& x, const NodeEmbeddings& y);

// Cost, flow and objective as text, for debugging.
void write_transport(std::ostream& out, const TransportProblem& problem, const TransportPlan& plan);

}  // namespace rge
