#pragma once

#include "strongcolor/graph.hpp"

#include <optional>
#include <vector>

namespace strongcolor {

struct EngineStats;

/// Bipartite graph between two disjoint equal-size vertex sets.
/// Adjacency is stored as sorted lists of right-side indexes per left index.
struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
    std::vector<std::vector<int>> adj;

    bool has_pair(int left_index, int right_index) const;
    long pair_count() const;
};

/// Either a perfect matching (left index -> right index) or a Hall
/// violator: a left subset S with |N(S)| < |S|. Exactly one is present.
struct MatchingResult {
    std::optional<std::vector<int>> matching;
    std::vector<int> violator;              // left vertex ids, ascending
    std::vector<int> violator_neighborhood; // N(S) as right vertex ids, ascending
};

/// Bipartite complement between v1 and v2: pair (a, b) is present exactly
/// when {a, b} is not an edge of g. Edges of g inside v1 or v2 are ignored.
Bipartition bipartite_complement(const Graph& g, const std::vector<int>& v1,
                                 const std::vector<int>& v2);

/// Augmenting-path search. On failure the violator is read off the final
/// alternating tree and re-verified against the Bipartition before return.
MatchingResult perfect_matching(const Bipartition& b);

/// Two-block solver: match each block-1 vertex to a non-neighbor in block 2
/// and give the i-th matched pair color i. Requires two blocks with
/// k >= 2 * max_degree(g); under that bound a matching always exists.
StrongColoring two_block_coloring(const Graph& g, const BlockPartition& p,
                                  EngineStats* stats = nullptr);

} // namespace strongcolor
