#pragma once

#include <string>
#include <utility>
#include <vector>

namespace strongcolor {

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency is kept as sorted neighbor lists; construction rejects
/// self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    /// All edges as (u, v) pairs with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(int v, const char* what) const;

    std::vector<std::vector<int>> adj_;
    long edge_count_ = 0;
};

/// Maximum degree over all vertices; 0 for the empty graph.
int max_degree(const Graph& g);

/// Copy of g on r*ceil(n/r) vertices; the new vertices are isolated.
Graph pad_with_isolated(const Graph& g, int r);

/// Ordered equal-size blocks covering {0, ..., t*k - 1}.
/// Blocks are stored with vertices sorted ascending.
class BlockPartition {
public:
    BlockPartition() = default;
    explicit BlockPartition(std::vector<std::vector<int>> blocks);
    BlockPartition(std::initializer_list<std::vector<int>> blocks)
        : BlockPartition(std::vector<std::vector<int>>(blocks))
    {
    }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_size() const { return block_size_; }
    int padded_size() const { return block_count() * block_size_; }
    const std::vector<int>& block(int i) const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int v) const;

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    int block_size_ = 0;
};

/// Total color assignment over a padded vertex set; colors are 0..k-1.
struct StrongColoring {
    std::vector<int> color;
};

/// Outcome of verify_strong_coloring with a failure witness.
/// A domain mismatch (coloring defined on the wrong vertex set) is kept
/// distinct from a genuine verification failure.
struct VerifyResult {
    enum class Kind {
        ok,
        monochromatic_edge,
        repeated_color_in_block,
        domain_mismatch,
    };

    Kind kind = Kind::ok;
    int u = -1;
    int v = -1;
    int block = -1;
    int color = -1;
    std::string detail;

    explicit operator bool() const { return kind == Kind::ok; }
    std::string describe() const;
};

/// Authoritative check: the coloring is proper on g (padding vertices have
/// no edges) and every block sees each color exactly once.
VerifyResult verify_strong_coloring(const Graph& g, const BlockPartition& p,
                                    const StrongColoring& c);

} // namespace strongcolor
