#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rge {

using NodeId = std::int32_t;
using Label = std::int32_t;

// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with optional discrete node labels. Immutable once
// built: the constructor canonicalizes the edge list (orients every pair as
// u < v, sorts, removes duplicates) and rejects self-loops and out-of-range
// endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::vector<Edge> edges, std::vector<Label> labels = {});

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }

  std::vector<int> degrees() const;
  std::vector<std::vector<NodeId>> adjacency() const;

  // Same structure, new node labels (empty clears them).
  Graph with_labels(std::vector<Label> labels) const;
  // Relabels node i as perm[i]; labels travel with their nodes.
  Graph permuted(std::span<const NodeId> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
};

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> graph_labels;

  int size() const { return static_cast<int>(graphs.size()); }
  int class_count() const;
  bool has_node_labels() const;
  int distinct_node_labels() const;

  // Throws PreconditionError when the dataset invariants do not hold.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace rge
