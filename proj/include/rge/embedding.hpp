#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rge/graph.hpp"
#include "rge/spectral.hpp"

namespace rge {

enum class Scheme { RF, ASG };

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);  // "rf" or "asg"

struct SamplerConfig {
  Scheme scheme = Scheme::RF;
  int d_max = 10;
  int R = 128;
  double gamma = 1.0;
  int d = 6;
  std::uint64_t seed = 1;
  bool use_labels = false;

  // Throws PreconditionError on gamma <= 0, R < 1, d_max < 1, d < 1, or
  // use_labels with the RF scheme.
  void validate() const;
};

// One random feature: D_j vectors with uniform mass 1/D_j.
struct RandomGraph {
  Eigen::MatrixXd vectors;  // D_j x d
  std::vector<Label> labels;

  int size() const { return static_cast<int>(vectors.rows()); }
  NodeEmbeddings as_embeddings() const;
  bool operator==(const RandomGraph&) const = default;
};

// Scalar min and max over every entry of every node embedding.
struct EmbeddingRange {
  double lo = 0.0;
  double hi = 0.0;
};
EmbeddingRange embedding_range(std::span<const NodeEmbeddings> embeddings);

RandomGraph sample_random_graph_rf(const EmbeddingRange& range, int size, int d, std::uint64_t seed);
RandomGraph sample_random_graph_rf(std::span<const NodeEmbeddings> embeddings, int size, int d,
                                   std::uint64_t seed);

// Rows of one uniformly drawn graph among `training` (indices into
// `embeddings`), drawn without replacement unless `size` exceeds its node
// count.
RandomGraph sample_random_graph_asg(std::span<const NodeEmbeddings> embeddings,
                                    std::span<const int> training, int size, bool use_labels,
                                    std::uint64_t seed);

// Draws the random graph of column j from derive_seed(seed, j): first
// D_j uniform on {1, ..., d_max}, then the scheme's sampler.
class RandomGraphSampler {
 public:
  RandomGraphSampler(std::span<const NodeEmbeddings> embeddings, const SamplerConfig& config,
                     std::vector<int> training = {});

  RandomGraph draw(std::uint64_t seed, std::uint64_t column) const;
  std::vector<RandomGraph> draw_many(std::uint64_t seed, int count) const;

 private:
  std::span<const NodeEmbeddings> embeddings_;
  SamplerConfig config_;
  std::vector<int> training_;
  EmbeddingRange range_;
};

double feature_value(const NodeEmbeddings& graph, const RandomGraph& omega, double gamma);

// N x R matrix of EMD(graph i, random graph j), parallel over columns.
Eigen::MatrixXd distance_matrix(std::span<const NodeEmbeddings> embeddings,
                                std::span<const RandomGraph> random_graphs, int threads = 1);

// exp(-gamma * E) / sqrt(R), entrywise.
Eigen::MatrixXd features_from_distances(const Eigen::MatrixXd& distances, double gamma);

struct EmbeddingMatrix {
  Eigen::MatrixXd values;  // N x R
  SamplerConfig config;
};

struct DatasetEmbedding {
  EmbeddingMatrix matrix;
  std::vector<RandomGraph> random_graphs;
};

// ASG requires a non-empty training subset; RF ignores it.
DatasetEmbedding embed_dataset(std::span<const NodeEmbeddings> embeddings, const SamplerConfig& config,
                               const std::vector<int>& training = {}, int threads = 1);

// Embeds with previously drawn random graphs, e.g. test graphs against the
// training-time columns.
EmbeddingMatrix embed_with(std::span<const NodeEmbeddings> embeddings,
                           std::span<const RandomGraph> random_graphs, const SamplerConfig& config,
                           int threads = 1);

void write_embedding_matrix(std::ostream& out, const EmbeddingMatrix& matrix);
EmbeddingMatrix read_embedding_matrix(std::istream& in);

void write_random_graphs(std::ostream& out, std::span<const RandomGraph> graphs);
std::vector<RandomGraph> read_random_graphs(std::istream& in);

}  // namespace rge
