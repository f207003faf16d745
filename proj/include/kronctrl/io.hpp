#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kronctrl/graph.hpp"
#include "kronctrl/matrix.hpp"

namespace kronctrl {

// Text formats. Blank lines and lines whose first non-blank character is
// '#' are ignored in both.
//
// Matrix: "rows cols" on the first line, then rows·cols rational literals in
// row-major order, whitespace separated.
//
// Graph: "graph <node_count> directed|undirected", then one "from to weight"
// edge per line (1-based). Undirected edges expand to both directions.
//
// Parse failures throw ParseError carrying the offending line number.

Mat parse_matrix(std::istream& in);
Mat parse_matrix(std::string_view text);
std::string serialize_matrix(const Mat& m);

WeightedDigraph parse_graph(std::istream& in);
WeightedDigraph parse_graph(std::string_view text);
/// Always written in directed form.
std::string serialize_graph(const WeightedDigraph& g);

/// DOT digraph with weights as edge labels. When `second_factor_nodes` is
/// nonzero the graph is treated as a Kronecker composite and node k is
/// labelled "i,p" with k = (i-1)·second_factor_nodes + p.
std::string to_dot(const WeightedDigraph& g, std::size_t second_factor_nodes = 0);

/// Comma separated 1-based node list such as "1,2,3"; empty text is the
/// empty list. Throws ParseError.
std::vector<std::size_t> parse_node_list(std::string_view text);

/// A system matrix read from either file format.
struct LoadedMatrix {
  Mat matrix;
  std::optional<WeightedDigraph> graph;  ///< set when the file was a graph
};

/// Reads a graph or matrix file, telling them apart by the "graph" header.
/// Throws ParseError (also for unreadable files).
LoadedMatrix load_matrix_or_graph(const std::filesystem::path& path);
LoadedMatrix load_matrix_or_graph_text(std::string_view text);

Mat load_matrix(const std::filesystem::path& path);
WeightedDigraph load_graph(const std::filesystem::path& path);

}  // namespace kronctrl
