#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rge/graph.hpp"

namespace rge {

struct SyntheticGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// Unlabeled graph on n >= 3 nodes with 2n distinct edges drawn uniformly
// without replacement from all node pairs (Floyd's subset sampling over the
// n(n-1)/2 pair indices, driven by the portable Rng). When 2n exceeds the
// number of pairs the graph is complete and a warning is recorded.
SyntheticGraph generate_synthetic(int node_count, std::uint64_t seed);

// `graph_count` synthetic graphs, graph i seeded by derive_seed(seed, i).
// Graph classes alternate 0, 1 so the output is a well-formed dataset.
Dataset generate_synthetic_dataset(int graph_count, int node_count, std::uint64_t seed,
                                   std::string name = "SYNTH");

}  // namespace rge
