#pragma once

#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "rge/spectral.hpp"

namespace rge {

// Smallest `count` eigenpairs of a sparse symmetric matrix by Lanczos with
// full reorthogonalization, explicit restarts and locking. `known` holds
// orthonormal eigenvectors already available (with `known_values`); they
// are deflated and returned as part of the result. Each accepted pair
// satisfies ||A v - l v|| <= tolerance. After `count` pairs are locked, a
// fresh deflated run checks that no smaller eigenvalue was missed, which
// guards against eigenvalue multiplicity.
EigenPairs lanczos_smallest(const Eigen::SparseMatrix<double>& matrix, int count,
                            const Eigen::MatrixXd& known, const Eigen::VectorXd& known_values,
                            double tolerance, std::uint64_t seed);

}  // namespace rge
