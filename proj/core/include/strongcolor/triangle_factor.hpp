#pragma once

#include "strongcolor/engine.hpp"
#include "strongcolor/graph.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace strongcolor {

/// Balanced tripartite graph with parts as the id ranges [0, N), [N, 2N),
/// [2N, 3N). Only cross edges are allowed.
struct TripartiteInstance {
    int part_size = 0;
    Graph graph;

    static TripartiteInstance from_edges(int part_size,
                                         const std::vector<std::pair<int, int>>& cross_edges);

    int part_of(int v) const { return part_size == 0 ? -1 : v / part_size; }
    int vertex_count() const { return 3 * part_size; }
};

/// N vertex-disjoint triangles covering all 3N vertices, one per part each.
struct TriangleFactor {
    std::vector<std::array<int, 3>> triangles;
};

/// Minimum over all vertices of the degree into the other two parts.
int min_cross_degree(const TripartiteInstance& t);

/// Cross-complement graph H plus the parts as a 3-block partition.
/// Requires min_cross_degree >= ceil(3N/2), which forces
/// max_degree(H) <= floor(N/2), so block size N meets the solver bound.
std::pair<Graph, BlockPartition> reduce_to_strong_coloring(const TripartiteInstance& t);

/// Runs the strong-coloring solver on the reduced instance; each color
/// class is independent in the complement, hence a triangle here.
TriangleFactor k3_factor(const TripartiteInstance& t, EngineStats* stats = nullptr);

/// Independent check of a factor: disjointness, coverage, one vertex per
/// part, and triangle-ness of every triple. Empty string means valid.
std::string check_triangle_factor(const TripartiteInstance& t, const TriangleFactor& f);

} // namespace strongcolor
