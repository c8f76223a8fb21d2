#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rge/embedding.hpp"
#include "rge/graph.hpp"

namespace rge {

struct CvGrid {
  std::vector<double> gammas{1e-3, 1e-2, 1e-1, 1.0, 10.0};
  std::vector<int> d_maxes{3, 6, 9, 12, 15, 18, 21, 24, 27, 30};
  std::vector<double> cs{1e-2, 1e-1, 1.0, 10.0, 100.0};
};

struct CvConfig {
  Scheme scheme = Scheme::RF;
  bool use_labels = false;
  int d = 6;
  int R = 0;  // 0: smallest power of two above the graph count
  int repetitions = 10;
  int folds = 10;
  int inner_folds = 3;
  std::uint64_t seed = 1;
  int threads = 1;
  // Standardize feature columns on the training rows (then scale by
  // 1/sqrt(R)) before the SVM.
  bool standardize = true;
  CvGrid grid;
};

struct FoldChoice {
  int repetition = 0;
  int fold = 0;
  double gamma = 0.0;
  int d_max = 0;
  double c = 0.0;
  double inner_accuracy = 0.0;
  double accuracy = 0.0;
};

struct CvReport {
  std::string dataset;
  int graphs = 0;
  std::vector<int> class_sizes;  // indexed by class id
  CvConfig config;
  int R = 0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // sample std over all runs
  double std_of_repetition_means = 0.0;
  std::vector<std::vector<double>> per_run_accuracies;  // repetitions x folds
  std::vector<FoldChoice> chosen_hyperparams;
  double wall_time = 0.0;
};

// Stratified split of `labels` into `folds` parts: each class is shuffled
// and dealt round-robin, continuing where the previous class stopped.
// Returns the member indices of each fold in ascending order.
std::vector<std::vector<int>> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed);

int default_feature_count(int graphs);

// Repeated stratified k-fold evaluation with inner grid search on the
// training folds only.
CvReport cross_validate(const Dataset& dataset, const CvConfig& config);

// Recomputes mean and both standard deviations from per_run_accuracies.
void summarize(CvReport& report);

// Key-value text followed by the accuracy grid and the per-fold choices.
void write_report(std::ostream& out, const CvReport& report, bool include_wall_time = true);

}  // namespace rge
