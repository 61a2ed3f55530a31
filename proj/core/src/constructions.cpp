#include "strongcolor/constructions.hpp"

#include "strongcolor/errors.hpp"

#include <algorithm>
#include <numeric>

namespace strongcolor {

Graph lower_bound_graph(int delta, int n)
{
    if (delta < 1)
        throw PreconditionError("delta must be positive");
    if (2 * delta > n)
        throw PreconditionError("lower-bound construction needs 2 * delta <= n");
    Graph g(n);
    for (int a = 0; a < delta; ++a)
        for (int b = delta; b < 2 * delta; ++b)
            g.add_edge(a, b);
    return g;
}

BlockPartition adversarial_partition(int delta, int n, int r)
{
    if (delta < 1)
        throw PreconditionError("delta must be positive");
    if (r < delta)
        throw PreconditionError("block size " + std::to_string(r)
            + " too small to host a side of " + std::to_string(delta));
    const int t = (n + r - 1) / r;
    if (t < 2)
        throw PreconditionError("adversarial layout needs at least two blocks");
    const int padded = t * r;
    std::vector<std::vector<int>> blocks(t);
    for (int v = 0; v < delta; ++v)
        blocks[0].push_back(v);
    for (int v = delta; v < 2 * delta; ++v)
        blocks[1].push_back(v);
    int next = 0;
    for (int v = 2 * delta; v < padded; ++v) {
        while (static_cast<int>(blocks[next].size()) == r)
            ++next;
        blocks[next].push_back(v);
    }
    return BlockPartition(std::move(blocks));
}

Graph random_bounded_degree_graph(int n, int delta_target, uint64_t seed)
{
    if (delta_target < 1)
        throw PreconditionError("delta_target must be positive");
    if (n < delta_target + 1)
        throw PreconditionError("need n >= delta_target + 1");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        // density factor in [96/256, 255/256) keeps edge counts varied
        const uint64_t f = 96 + rng.below(160);
        const long full = static_cast<long>(n) * delta_target / 2;
        const long target = std::max<long>(1, full * static_cast<long>(f) / 256);

        Graph g(n);
        std::vector<int> deg(n, 0);
        long added = 0;
        const long tries_cap = 20 * target + 100;
        for (long tries = 0; tries < tries_cap && added < target; ++tries) {
            int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            int v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            if (u == v || deg[u] >= delta_target || deg[v] >= delta_target)
                continue;
            if (g.has_edge(u, v))
                continue;
            g.add_edge(u, v);
            ++deg[u];
            ++deg[v];
            ++added;
        }

        // make sure the target degree is attained somewhere
        int top = 0;
        for (int v = 1; v < n; ++v)
            if (deg[v] > deg[top])
                top = v;
        for (int v = 0; v < n && deg[top] < delta_target; ++v) {
            if (v == top || deg[v] >= delta_target || g.has_edge(top, v))
                continue;
            g.add_edge(top, v);
            ++deg[top];
            ++deg[v];
        }
        if (deg[top] == delta_target)
            return g;
    }
    throw PreconditionError("could not attain the target degree after 32 attempts");
}

BlockPartition random_equal_partition(int vertex_count, int k, uint64_t seed)
{
    if (k < 1)
        throw PreconditionError("block size must be positive");
    if (vertex_count % k != 0)
        throw PreconditionError("block size " + std::to_string(k)
            + " does not divide " + std::to_string(vertex_count));
    std::vector<int> ids(vertex_count);
    std::iota(ids.begin(), ids.end(), 0);
    SplitMix64 rng(seed);
    for (int i = vertex_count - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(ids[i], ids[j]);
    }
    std::vector<std::vector<int>> blocks(vertex_count / k);
    for (int i = 0; i < vertex_count; ++i)
        blocks[i / k].push_back(ids[i]);
    return BlockPartition(std::move(blocks));
}

TripartiteInstance random_dense_tripartite(int part_size, uint64_t seed)
{
    if (part_size < 1)
        throw PreconditionError("part size must be positive");
    const int n = part_size;
    const int threshold = (3 * n + 1) / 2;
    std::vector<std::pair<int, int>> cross;
    for (int pa = 0; pa < 3; ++pa)
        for (int pb = pa + 1; pb < 3; ++pb)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    cross.emplace_back(pa * n + i, pb * n + j);

    SplitMix64 rng(seed);
    for (int i = static_cast<int>(cross.size()) - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(cross[i], cross[j]);
    }
    // walk the shuffled pairs, deleting while both endpoints keep slack
    const uint64_t keep_bias = rng.below(128); // varies density across seeds
    std::vector<int> deg(3 * n, 2 * n);
    std::vector<char> removed(cross.size(), 0);
    for (size_t i = 0; i < cross.size(); ++i) {
        auto [u, v] = cross[i];
        if (deg[u] <= threshold || deg[v] <= threshold)
            continue;
        if (rng.below(256) < keep_bias)
            continue;
        removed[i] = 1;
        --deg[u];
        --deg[v];
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < cross.size(); ++i)
        if (!removed[i])
            edges.push_back(cross[i]);
    return TripartiteInstance::from_edges(n, edges);
}

} // namespace strongcolor
