#pragma once

#include <cstdint>

namespace rge::tol {

// Marginal mass mismatch accepted by the transport solver.
inline constexpr double kFeasibility = 1e-9;
// Agreement between the transport solver and independent LP oracles.
inline constexpr double kOracle = 1e-9;
// Node weight vectors and transport marginals must sum to one this closely.
inline constexpr double kWeightSum = 1e-12;
// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kEigenTie = 1e-10;
// Relative eigen-residual bound, ||Lv - lv|| <= kEigenResidual * ||L||_F.
inline constexpr double kEigenResidual = 1e-8;
// Asymmetry accepted by the centered EMD kernel.
inline constexpr double kSymmetry = 1e-9;

// Transport masses are solved exactly on an integer grid of this resolution.
inline constexpr std::int64_t kMassScale = std::int64_t{1} << 50;

}  // namespace rge::tol
