#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rge {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SvmOptions {
  double tolerance = 1e-4;  // projected-gradient spread
  int max_epochs = 1000;
  std::uint64_t seed = 0;  // coordinate order
};

// One-vs-rest linear classifier: row c of `weights` and bias(c) score class
// classes[c]. Two-class models store the second row as the negated first.
struct LinearModel {
  Eigen::MatrixXd weights;  // K x R
  Eigen::VectorXd bias;     // K
  std::vector<int> classes;

  Eigen::VectorXd decision_values(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
  // Highest score wins; ties go to the lower class id.
  int predict_one(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
  std::vector<int> predict(const Eigen::Ref<const RowMatrix>& x) const;
};

struct BinarySvm {
  Eigen::VectorXd w;
  double b = 0.0;
  int epochs = 0;
};

// L2-regularized hinge loss with the bias as an extra unit feature:
//   min 1/2 (|w|^2 + b^2) + C sum max(0, 1 - y_i (w.x_i + b)),
// solved by dual coordinate descent with shrinking. `alpha`, when given,
// is the warm start (clipped to [0, C]) and receives the final duals.
BinarySvm train_binary_svm(const Eigen::Ref<const RowMatrix>& x, std::span<const int> y, double c,
                           const SvmOptions& options = {}, Eigen::VectorXd* alpha = nullptr);

double svm_primal_objective(const Eigen::Ref<const RowMatrix>& x, std::span<const int> y, double c,
                            const Eigen::VectorXd& w, double b);

// Labels are arbitrary ints; at least two distinct values are required.
LinearModel svm_train(const Eigen::Ref<const RowMatrix>& features, std::span<const int> labels, double c,
                      const SvmOptions& options = {});

// Trains a sequence of models on fixed data, warm-starting each from the
// previous duals. Deterministic for a fixed sequence of C values.
class SvmPath {
 public:
  SvmPath(const Eigen::Ref<const RowMatrix>& features, std::span<const int> labels, SvmOptions options = {});
  LinearModel train(double c);

 private:
  RowMatrix features_;
  std::vector<int> classes_;
  std::vector<std::vector<int>> signs_;  // per binary problem, +1/-1 per row
  std::vector<Eigen::VectorXd> alphas_;
  SvmOptions options_;
};

// Per-column affine map fitted on training rows: (x - mean) / std * scale.
// Constant columns are only centered.
struct ColumnScaler {
  Eigen::RowVectorXd mean;
  Eigen::RowVectorXd factor;

  static ColumnScaler fit(const Eigen::Ref<const RowMatrix>& x, double scale = 1.0);
  RowMatrix apply(const Eigen::Ref<const RowMatrix>& x) const;
};

double accuracy(std::span<const int> predicted, std::span<const int> truth);

}  // namespace rge
