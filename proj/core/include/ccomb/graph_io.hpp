#ifndef CCOMB_GRAPH_IO_HPP
#define CCOMB_GRAPH_IO_HPP

// Graph files and DOT export.
//
// A graph file is a JSON object:
//
//   {
//     "vertices": 4,
//     "edges": [[0, 1], [1, 2], [1, 3], [2, 2]],
//     "root": 0,
//     "second_root": 1,
//     "colored": false,
//     "vertex_labels": [[0, 0], [0, 1], ...]
//   }
//
// Edges are [i, j] or [i, j, color] with color 1 or 2; [i, i] is a loop. A
// file is colored when "colored" is true or any edge carries a color, and then
// every edge must carry one. "second_root" and "vertex_labels" are optional.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccomb/graphs.hpp"
#include "ccomb/products.hpp"

namespace ccomb {

struct GraphFile {
  Graph graph;
  std::optional<std::vector<Label>> vertex_labels;
};

/// Throws ParseError on malformed input, duplicate edges or out-of-range indices.
GraphFile parse_graph(const std::string& text);
GraphFile read_graph_file(const std::filesystem::path& path);

/// Deterministic JSON rendering (edges sorted, two-space indentation).
std::string format_graph(const Graph& g, const std::vector<Label>* labels = nullptr);
void write_graph_file(const std::filesystem::path& path, const Graph& g, const std::vector<Label>* labels = nullptr);

/// Graphviz rendering: root e as a double circle, root f as a square (both
/// roles on one vertex render as a double octagon), color one solid and color
/// two dashed. Vertices and edges are emitted in index order.
std::string to_dot(const Graph& g, const std::vector<Label>* labels = nullptr, const std::string& name = "G");

}  // namespace ccomb

#endif  // CCOMB_GRAPH_IO_HPP
