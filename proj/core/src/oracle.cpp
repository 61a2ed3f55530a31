#include "strongcolor/oracle.hpp"

#include "strongcolor/errors.hpp"

#include <algorithm>

namespace strongcolor {

namespace {

struct PartitionEnum {
    int n, t, k;
    long max_partitions;
    long emitted = 0;
    std::vector<std::vector<int>> blocks;
    const std::function<bool(const std::vector<std::vector<int>>&)>* fn;

    // The lowest unassigned vertex either joins an open block or starts the
    // next one, so every unordered partition shows up exactly once, blocks
    // ordered by their minimum element.
    bool place(int v)
    {
        if (v == n) {
            if (++emitted > max_partitions)
                throw ResourceExceeded("partition enumeration cap of "
                    + std::to_string(max_partitions) + " exceeded");
            return (*fn)(blocks);
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (static_cast<int>(blocks[b].size()) == k)
                continue;
            blocks[b].push_back(v);
            if (place(v + 1))
                return true;
            blocks[b].pop_back();
        }
        if (static_cast<int>(blocks.size()) < t) {
            blocks.emplace_back();
            blocks.back().push_back(v);
            if (place(v + 1))
                return true;
            blocks.pop_back();
        }
        return false;
    }
};

struct ExactSearch {
    const Graph& g;
    const BlockPartition& p;
    long node_limit;
    long nodes = 0;
    std::vector<int> color;
    std::vector<unsigned> used; // per block, bitmask of colors taken

    ExactSearch(const Graph& graph, const BlockPartition& part, long limit)
        : g(graph), p(part), node_limit(limit), color(part.padded_size(), -1),
          used(part.block_count(), 0)
    {
    }

    bool conflicts(int v, int c) const
    {
        if (v >= g.vertex_count())
            return false; // padding vertex
        for (int u : g.neighbors(v))
            if (color[u] == c)
                return true;
        return false;
    }

    // Vertices are assigned block by block; each block takes a bijection to
    // the colors, pruned against already-colored neighbors.
    bool extend(int b, int i)
    {
        if (b == p.block_count())
            return true;
        if (i == p.block_size())
            return extend(b + 1, 0);
        const int v = p.block(b)[i];
        for (int c = 0; c < p.block_size(); ++c) {
            if (used[b] & (1u << c))
                continue;
            if (++nodes > node_limit)
                throw ResourceExceeded("backtracking node cap of "
                    + std::to_string(node_limit) + " exceeded");
            if (conflicts(v, c))
                continue;
            color[v] = c;
            used[b] |= 1u << c;
            if (extend(b, i + 1))
                return true;
            color[v] = -1;
            used[b] &= ~(1u << c);
        }
        return false;
    }
};

} // namespace

bool for_each_equal_partition(int n, int t, int k,
                              const std::function<bool(const std::vector<std::vector<int>>&)>& fn,
                              long max_partitions)
{
    if (n != t * k)
        throw PreconditionError("partition enumeration needs n == t * k");
    if (n == 0)
        return fn({});
    PartitionEnum pe{n, t, k, max_partitions};
    pe.fn = &fn;
    return pe.place(0);
}

std::optional<StrongColoring> color_partition_exact(const Graph& g,
                                                    const BlockPartition& p,
                                                    const OracleBudget& budget)
{
    const int n = g.vertex_count();
    const int padded = p.padded_size();
    if (padded < n)
        throw PreconditionError("partition does not cover the graph");
    if (p.block_count() > 0) {
        const int k = p.block_size();
        if (padded != k * ((n + k - 1) / k) && n > 0)
            throw PreconditionError("partition must cover exactly the padded set");
    }
    if (padded > budget.max_vertices)
        throw ResourceExceeded("padded size " + std::to_string(padded)
            + " exceeds budget of " + std::to_string(budget.max_vertices));
    if (p.block_count() == 0)
        return StrongColoring{};
    if (p.block_size() > 31)
        throw ResourceExceeded("block size beyond color bitmask width");

    ExactSearch search(g, p, budget.node_limit);
    // Pin block 1 to the identity coloring; colors are interchangeable so
    // this breaks the color-relabeling symmetry without losing solutions.
    for (int i = 0; i < p.block_size(); ++i)
        search.color[p.block(0)[i]] = i;
    search.used[0] = (1u << p.block_size()) - 1;
    if (!search.extend(1, 0))
        return std::nullopt;
    StrongColoring c{std::move(search.color)};
    VerifyResult vr = verify_strong_coloring(g, p, c);
    if (!vr)
        throw InternalContradiction("oracle witness failed verification", vr.describe());
    return c;
}

AllPartitionsResult strongly_colorable_all_partitions(const Graph& g, int r,
                                                      const OracleBudget& budget)
{
    if (r < 1)
        throw PreconditionError("block size must be positive");
    const int n = g.vertex_count();
    const int t = (n + r - 1) / r;
    const int padded = t * r;
    if (padded > budget.max_vertices)
        throw ResourceExceeded("padded size " + std::to_string(padded)
            + " exceeds budget of " + std::to_string(budget.max_vertices));

    AllPartitionsResult result;
    result.colorable = true;
    for_each_equal_partition(padded, t, r,
        [&](const std::vector<std::vector<int>>& blocks) {
            BlockPartition p(blocks);
            if (!color_partition_exact(g, p, budget)) {
                result.colorable = false;
                result.witness = std::move(p);
                return true;
            }
            return false;
        },
        budget.max_partitions);
    return result;
}

int exact_strong_chromatic_number(const Graph& g, const OracleBudget& budget)
{
    const int start = max_degree(g) + 1;
    for (int r = start;; ++r) {
        if (strongly_colorable_all_partitions(g, r, budget).colorable)
            return r; // monotone in r, so the first success is the minimum
    }
}

} // namespace strongcolor
