#include "strongcolor/graph.hpp"

#include "strongcolor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strongcolor {

Graph::Graph(int n)
{
    if (n < 0)
        throw PreconditionError("vertex count must be non-negative");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v, const char* what) const
{
    if (v < 0 || v >= vertex_count()) {
        std::ostringstream os;
        os << what << " vertex " << v << " out of range [0, " << vertex_count() << ")";
        throw PreconditionError(os.str());
    }
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u, "edge");
    check_vertex(v, "edge");
    if (u == v)
        throw PreconditionError("self-loop rejected at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw PreconditionError("duplicate edge {" + std::to_string(u) + ", "
            + std::to_string(v) + "} rejected");
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u, "query");
    check_vertex(v, "query");
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const
{
    check_vertex(v, "query");
    return adj_[v];
}

int Graph::degree(int v) const
{
    check_vertex(v, "query");
    return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int max_degree(const Graph& g)
{
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

Graph pad_with_isolated(const Graph& g, int r)
{
    if (r < 1)
        throw PreconditionError("padding block size must be positive");
    const int n = g.vertex_count();
    const int blocks = (n + r - 1) / r;
    Graph padded(blocks * r);
    for (auto [u, v] : g.edges())
        padded.add_edge(u, v);
    return padded;
}

BlockPartition::BlockPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks))
{
    const int t = static_cast<int>(blocks_.size());
    if (t == 0)
        return;
    block_size_ = static_cast<int>(blocks_[0].size());
    if (block_size_ == 0)
        throw PreconditionError("blocks must be non-empty");
    const int total = t * block_size_;
    block_of_.assign(total, -1);
    for (int b = 0; b < t; ++b) {
        if (static_cast<int>(blocks_[b].size()) != block_size_)
            throw PreconditionError("blocks must have equal sizes");
        std::sort(blocks_[b].begin(), blocks_[b].end());
        for (int v : blocks_[b]) {
            if (v < 0 || v >= total)
                throw PreconditionError("block vertex " + std::to_string(v)
                    + " outside {0, ..., " + std::to_string(total - 1) + "}");
            if (block_of_[v] != -1)
                throw PreconditionError("vertex " + std::to_string(v)
                    + " appears in more than one block");
            block_of_[v] = b;
        }
    }
    // cover is implied: total slots filled, all distinct, all in range
}

const std::vector<int>& BlockPartition::block(int i) const
{
    if (i < 0 || i >= block_count())
        throw PreconditionError("block index out of range");
    return blocks_[i];
}

int BlockPartition::block_of(int v) const
{
    if (v < 0 || v >= padded_size())
        throw PreconditionError("vertex " + std::to_string(v) + " outside partition");
    return block_of_[v];
}

std::string VerifyResult::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::ok:
        os << "ok";
        break;
    case Kind::monochromatic_edge:
        os << "monochromatic edge {" << u << ", " << v << "} (color " << color << ")";
        break;
    case Kind::repeated_color_in_block:
        os << "color " << color << " repeated in block " << block;
        break;
    case Kind::domain_mismatch:
        os << "domain mismatch: " << detail;
        break;
    }
    return os.str();
}

VerifyResult verify_strong_coloring(const Graph& g, const BlockPartition& p,
                                    const StrongColoring& c)
{
    VerifyResult r;
    const int padded = p.padded_size();
    if (g.vertex_count() > padded) {
        r.kind = VerifyResult::Kind::domain_mismatch;
        r.detail = "partition covers " + std::to_string(padded)
            + " vertices but graph has " + std::to_string(g.vertex_count());
        return r;
    }
    if (static_cast<int>(c.color.size()) != padded) {
        r.kind = VerifyResult::Kind::domain_mismatch;
        r.detail = "coloring assigns " + std::to_string(c.color.size())
            + " vertices, padded set has " + std::to_string(padded);
        return r;
    }
    const int k = p.block_size();
    for (int v = 0; v < padded; ++v) {
        if (c.color[v] < 0 || c.color[v] >= k) {
            r.kind = VerifyResult::Kind::domain_mismatch;
            r.detail = "vertex " + std::to_string(v) + " has color "
                + std::to_string(c.color[v]) + " outside [0, " + std::to_string(k) + ")";
            return r;
        }
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v && c.color[u] == c.color[v]) {
                r.kind = VerifyResult::Kind::monochromatic_edge;
                r.u = u;
                r.v = v;
                r.color = c.color[u];
                return r;
            }
        }
    }
    std::vector<int> seen(k, -1);
    for (int b = 0; b < p.block_count(); ++b) {
        for (int v : p.block(b)) {
            if (seen[c.color[v]] == b) {
                r.kind = VerifyResult::Kind::repeated_color_in_block;
                r.block = b;
                r.color = c.color[v];
                return r;
            }
            seen[c.color[v]] = b;
        }
    }
    return r;
}

} // namespace strongcolor
