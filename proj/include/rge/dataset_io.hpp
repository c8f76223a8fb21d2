#pragma once

#include <filesystem>
#include <string_view>

#include "rge/graph.hpp"

namespace rge {

// Reads the four-file benchmark layout NAME_A.txt, NAME_graph_indicator.txt,
// NAME_graph_labels.txt and the optional NAME_node_labels.txt from `dir`.
// Node ids in the files are global and 1-indexed; the result is 0-indexed
// per graph. Graph classes and node labels are remapped to consecutive ids
// in ascending order of their original values.
Dataset parse_dataset(const std::filesystem::path& dir, std::string_view name);

// Finds the directory holding NAME_A.txt: `root/NAME/` if present, else `root`.
std::filesystem::path locate_dataset(const std::filesystem::path& root, std::string_view name);

// Writes `dataset` in the same layout (node_labels only when present).
void write_dataset(const Dataset& dataset, const std::filesystem::path& dir);

}  // namespace rge
