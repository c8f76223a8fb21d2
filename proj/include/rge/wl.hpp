#pragma once

#include "rge/graph.hpp"

namespace rge {

// Weisfeiler-Leman refinement of node labels, `iterations` >= 1 rounds. Each
// round replaces a node's label by the id of (label, sorted neighbor labels);
// ids are assigned over the whole dataset in first-encounter order (graphs in
// order, nodes in order), so labels are comparable across graphs.
Dataset wl_relabel(const Dataset& dataset, int iterations);

}  // namespace rge
