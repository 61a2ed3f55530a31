#pragma once

#include "strongcolor/graph.hpp"
#include "strongcolor/triangle_factor.hpp"

#include <iosfwd>
#include <string>

namespace strongcolor {

// Text formats. Lines starting with '#' are comments; every emitted line is
// newline-terminated.
//
//   graph:      "p <n> <m>" then m lines "<u> <v>" with 0 <= u < v < n
//   partition:  one block per line, space-separated vertex ids
//   coloring:   one line "<vertex> <color>" per padded vertex
//   tripartite: "t <N>" then cross-edge lines "<u> <v>"
//   factor:     N lines of three ids, one triangle per line

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

BlockPartition read_partition(std::istream& in);
BlockPartition read_partition_file(const std::string& path);
void write_partition(std::ostream& out, const BlockPartition& p);
void write_partition_file(const std::string& path, const BlockPartition& p);

StrongColoring read_coloring(std::istream& in);
StrongColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const StrongColoring& c);
void write_coloring_file(const std::string& path, const StrongColoring& c);

TripartiteInstance read_tripartite(std::istream& in);
TripartiteInstance read_tripartite_file(const std::string& path);
void write_tripartite(std::ostream& out, const TripartiteInstance& t);
void write_tripartite_file(const std::string& path, const TripartiteInstance& t);

void write_factor(std::ostream& out, const TriangleFactor& f);
void write_factor_file(const std::string& path, const TriangleFactor& f);

} // namespace strongcolor
