#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "rge/embedding.hpp"

namespace rge {

inline constexpr int kOracleSamples = 8192;

// Inner product of two embedding rows.
double approx_kernel(std::span<const double> zx, std::span<const double> zy);

// Gram matrix Z Z^T.
Eigen::MatrixXd approx_gram(const Eigen::MatrixXd& z);

// Monte-Carlo estimate of the kernel integral over `samples` random graphs
// drawn from `sampler` under `seed`.
double exact_kernel_mc(const NodeEmbeddings& x, const NodeEmbeddings& y,
                       const RandomGraphSampler& sampler, double gamma, std::uint64_t seed,
                       int samples = kOracleSamples);

// The same estimate for every pair of `embeddings` at once.
Eigen::MatrixXd exact_kernel_mc_matrix(std::span<const NodeEmbeddings> embeddings,
                                       const RandomGraphSampler& sampler, double gamma,
                                       std::uint64_t seed, int samples = kOracleSamples,
                                       int threads = 1);

// Pairwise EMD matrix.
Eigen::MatrixXd pairwise_emd(std::span<const NodeEmbeddings> embeddings, int threads = 1);

// K = -1/2 J D J with J = I - 11^T / N. D must be square, symmetric within
// tol::kSymmetry and zero on the diagonal.
Eigen::MatrixXd indefinite_emd_kernel(const Eigen::MatrixXd& distances);

struct ExtremeEigenvalues {
  double min = 0.0;
  double max = 0.0;
};
ExtremeEigenvalues extreme_eigenvalues(const Eigen::MatrixXd& symmetric);

}  // namespace rge
