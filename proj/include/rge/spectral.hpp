#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "rge/graph.hpp"

namespace rge {

// Geometric embedding of one graph: row i is the node's position in the unit
// hypercube, `weights` its transport mass. `labels` is empty unless node
// labels were attached for label-aware ground distances.
struct NodeEmbeddings {
  Eigen::MatrixXd vectors;  // n x d, entries in [0, 1]
  Eigen::VectorXd weights;  // n, non-negative, sums to 1
  std::vector<Label> labels;

  int node_count() const { return static_cast<int>(vectors.rows()); }
  int dim() const { return static_cast<int>(vectors.cols()); }
  bool labeled() const { return !labels.empty(); }
};

// Signed eigenpairs in ascending eigenvalue order, unit-norm columns.
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

enum class EigenSolverKind { Automatic, Dense, Lanczos };

// Components up to this many nodes are solved densely under Automatic.
inline constexpr int kDenseEigenLimit = 256;

// L = I - D^{-1/2} A D^{-1/2}; rows and columns of isolated nodes are zero.
Eigen::MatrixXd normalized_laplacian(const Graph& graph);
Eigen::SparseMatrix<double> normalized_laplacian_sparse(const Graph& graph);

// The `count` smallest eigenpairs of the normalized Laplacian (fewer when the
// graph has fewer nodes). Connected components are solved independently and
// merged, so every eigenvector is supported on one component. Eigenvalues
// within tol::kEigenTie of each other are ordered by lexicographic comparison
// of their absolute-value vectors.
EigenPairs smallest_eigenpairs(const Graph& graph, int count,
                               EigenSolverKind solver = EigenSolverKind::Automatic);

// degree(i) / sum of degrees; uniform when the graph has no edges.
Eigen::VectorXd nbow_weights(const Graph& graph);

// Absolute values of the d smallest eigenvectors (zero-padded when d > n)
// plus nBOW weights. Labels are not attached.
NodeEmbeddings node_embeddings(const Graph& graph, int d,
                               EigenSolverKind solver = EigenSolverKind::Automatic);

// Copies the graph's node labels into the embedding.
NodeEmbeddings attach_labels(NodeEmbeddings embeddings, const Graph& graph);

// node_embeddings for every graph of the dataset, computed on `threads`
// workers; identical output for any thread count.
std::vector<NodeEmbeddings> embed_nodes(const Dataset& dataset, int d, bool with_labels,
                                        int threads = 1);

// One node per line: d coordinates then the weight, 17 significant digits.
void write_embeddings(std::ostream& out, const NodeEmbeddings& embeddings);

}  // namespace rge
