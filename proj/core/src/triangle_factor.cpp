#include "strongcolor/triangle_factor.hpp"

#include "strongcolor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strongcolor {

TripartiteInstance TripartiteInstance::from_edges(int part_size,
                                                  const std::vector<std::pair<int, int>>& cross_edges)
{
    if (part_size < 0)
        throw PreconditionError("part size must be non-negative");
    TripartiteInstance t;
    t.part_size = part_size;
    t.graph = Graph(3 * part_size);
    for (auto [u, v] : cross_edges) {
        if (u < 0 || v < 0 || u >= 3 * part_size || v >= 3 * part_size)
            throw PreconditionError("cross edge endpoint out of range");
        if (t.part_of(u) == t.part_of(v))
            throw PreconditionError("edge {" + std::to_string(u) + ", "
                + std::to_string(v) + "} lies inside a part");
        t.graph.add_edge(u, v);
    }
    return t;
}

int min_cross_degree(const TripartiteInstance& t)
{
    if (t.part_size == 0)
        return 0;
    int d = t.graph.degree(0);
    for (int v = 1; v < t.vertex_count(); ++v)
        d = std::min(d, t.graph.degree(v));
    return d;
}

std::pair<Graph, BlockPartition> reduce_to_strong_coloring(const TripartiteInstance& t)
{
    const int n = t.part_size;
    const int threshold = (3 * n + 1) / 2;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.graph.degree(v) < threshold)
            throw DegreeTooLow("vertex " + std::to_string(v) + " has cross-degree "
                    + std::to_string(t.graph.degree(v)) + " below "
                    + std::to_string(threshold),
                v);

    Graph h(3 * n);
    for (int pa = 0; pa < 3; ++pa)
        for (int pb = pa + 1; pb < 3; ++pb)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int u = pa * n + i, v = pb * n + j;
                    if (!t.graph.has_edge(u, v))
                        h.add_edge(u, v);
                }
    std::vector<std::vector<int>> parts(3);
    for (int p = 0; p < 3; ++p)
        for (int i = 0; i < n; ++i)
            parts[p].push_back(p * n + i);
    return {std::move(h), BlockPartition(std::move(parts))};
}

TriangleFactor k3_factor(const TripartiteInstance& t, EngineStats* stats)
{
    auto [h, parts] = reduce_to_strong_coloring(t);
    StrongColoring c = strong_coloring(h, parts, stats);
    TriangleFactor f;
    f.triangles.assign(t.part_size, {-1, -1, -1});
    for (int v = 0; v < t.vertex_count(); ++v)
        f.triangles[c.color[v]][t.part_of(v)] = v;
    std::string err = check_triangle_factor(t, f);
    if (!err.empty())
        throw InternalContradiction("factor failed independent verification", err);
    return f;
}

std::string check_triangle_factor(const TripartiteInstance& t, const TriangleFactor& f)
{
    const int n = t.part_size;
    if (static_cast<int>(f.triangles.size()) != n)
        return "expected " + std::to_string(n) + " triangles, got "
            + std::to_string(f.triangles.size());
    std::vector<char> seen(t.vertex_count(), 0);
    for (size_t i = 0; i < f.triangles.size(); ++i) {
        const auto& tri = f.triangles[i];
        for (int p = 0; p < 3; ++p) {
            const int v = tri[p];
            if (v < 0 || v >= t.vertex_count())
                return "triangle " + std::to_string(i) + " has an out-of-range vertex";
            if (t.part_of(v) != p)
                return "triangle " + std::to_string(i) + " vertex " + std::to_string(v)
                    + " is not in part " + std::to_string(p);
            if (seen[v])
                return "vertex " + std::to_string(v) + " reused across triangles";
            seen[v] = 1;
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (!t.graph.has_edge(tri[a], tri[b]))
                    return "triangle " + std::to_string(i) + " misses edge {"
                        + std::to_string(tri[a]) + ", " + std::to_string(tri[b]) + "}";
    }
    return {}; // disjointness + count imply full coverage
}

} // namespace strongcolor
