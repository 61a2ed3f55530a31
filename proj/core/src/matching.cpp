#include "strongcolor/matching.hpp"

#include "strongcolor/engine.hpp"
#include "strongcolor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strongcolor {

bool Bipartition::has_pair(int left_index, int right_index) const
{
    const auto& a = adj[left_index];
    return std::binary_search(a.begin(), a.end(), right_index);
}

long Bipartition::pair_count() const
{
    long m = 0;
    for (const auto& a : adj)
        m += static_cast<long>(a.size());
    return m;
}

Bipartition bipartite_complement(const Graph& g, const std::vector<int>& v1,
                                 const std::vector<int>& v2)
{
    if (v1.size() != v2.size())
        throw PreconditionError("complement blocks must have equal sizes");
    std::vector<char> in_v1(g.vertex_count(), 0);
    for (int a : v1) {
        if (a < 0 || a >= g.vertex_count())
            throw PreconditionError("block vertex outside graph");
        in_v1[a] = 1;
    }
    for (int b : v2) {
        if (b < 0 || b >= g.vertex_count())
            throw PreconditionError("block vertex outside graph");
        if (in_v1[b])
            throw PreconditionError("complement blocks overlap at vertex "
                + std::to_string(b));
    }
    Bipartition out;
    out.left = v1;
    out.right = v2;
    out.adj.resize(v1.size());
    for (size_t i = 0; i < v1.size(); ++i)
        for (size_t j = 0; j < v2.size(); ++j)
            if (!g.has_edge(v1[i], v2[j]))
                out.adj[i].push_back(static_cast<int>(j));
    return out;
}

namespace {

struct Matcher {
    const Bipartition& b;
    std::vector<int> match_left;  // left index -> right index or -1
    std::vector<int> match_right; // right index -> left index or -1
    std::vector<int> stamp;
    int round = 0;

    explicit Matcher(const Bipartition& bp)
        : b(bp)
        , match_left(bp.left.size(), -1)
        , match_right(bp.right.size(), -1)
        , stamp(bp.left.size(), -1)
    {
    }

    bool augment(int li)
    {
        stamp[li] = round;
        for (int rj : b.adj[li]) {
            if (match_right[rj] == -1) {
                match_left[li] = rj;
                match_right[rj] = li;
                return true;
            }
        }
        for (int rj : b.adj[li]) {
            int other = match_right[rj];
            if (stamp[other] != round && augment(other)) {
                match_left[li] = rj;
                match_right[rj] = li;
                return true;
            }
        }
        return false;
    }

    // Alternating tree from the failed root: S = reachable left vertices,
    // T = reachable right vertices; the classic constructive Hall witness.
    void collect_violator(int root, std::vector<int>& s_left, std::vector<int>& t_right) const
    {
        std::vector<char> in_s(b.left.size(), 0), in_t(b.right.size(), 0);
        std::vector<int> queue{root};
        in_s[root] = 1;
        while (!queue.empty()) {
            int li = queue.back();
            queue.pop_back();
            for (int rj : b.adj[li]) {
                if (in_t[rj])
                    continue;
                in_t[rj] = 1;
                int other = match_right[rj];
                if (other != -1 && !in_s[other]) {
                    in_s[other] = 1;
                    queue.push_back(other);
                }
            }
        }
        for (size_t i = 0; i < b.left.size(); ++i)
            if (in_s[i])
                s_left.push_back(static_cast<int>(i));
        for (size_t j = 0; j < b.right.size(); ++j)
            if (in_t[j])
                t_right.push_back(static_cast<int>(j));
    }
};

} // namespace

MatchingResult perfect_matching(const Bipartition& b)
{
    if (b.left.size() != b.right.size())
        throw PreconditionError("sides must have equal sizes");
    Matcher m(b);
    for (size_t li = 0; li < b.left.size(); ++li) {
        ++m.round;
        if (m.augment(static_cast<int>(li)))
            continue;

        std::vector<int> s_idx, t_idx;
        m.collect_violator(static_cast<int>(li), s_idx, t_idx);

        // Re-verify instead of trusting the search: N(S) must equal T and
        // must be smaller than S.
        std::vector<char> in_t(b.right.size(), 0);
        for (int j : t_idx)
            in_t[j] = 1;
        size_t n_of_s = 0;
        for (int i : s_idx)
            for (int rj : b.adj[i]) {
                if (!in_t[rj])
                    throw InternalContradiction("violator neighborhood mismatch",
                        "left_index=" + std::to_string(i) + " right_index=" + std::to_string(rj));
            }
        std::vector<char> seen(b.right.size(), 0);
        for (int i : s_idx)
            for (int rj : b.adj[i])
                if (!seen[rj]) {
                    seen[rj] = 1;
                    ++n_of_s;
                }
        if (n_of_s >= s_idx.size() || n_of_s != t_idx.size())
            throw InternalContradiction("violator fails Hall inequality on re-check",
                "|S|=" + std::to_string(s_idx.size()) + " |N(S)|=" + std::to_string(n_of_s));

        MatchingResult res;
        for (int i : s_idx)
            res.violator.push_back(b.left[i]);
        for (int j : t_idx)
            res.violator_neighborhood.push_back(b.right[j]);
        std::sort(res.violator.begin(), res.violator.end());
        std::sort(res.violator_neighborhood.begin(), res.violator_neighborhood.end());
        return res;
    }
    MatchingResult res;
    res.matching = std::move(m.match_left);
    return res;
}

StrongColoring two_block_coloring(const Graph& g, const BlockPartition& p,
                                  EngineStats* stats)
{
    (void)stats;
    if (p.block_count() != 2)
        throw PreconditionError("two-block coloring needs exactly 2 blocks");
    const int k = p.block_size();
    const int delta = max_degree(g);
    if (k < 2 * delta)
        throw UnsupportedRegime("block size " + std::to_string(k)
            + " below 2 * max degree = " + std::to_string(2 * delta));
    if (g.vertex_count() > p.padded_size())
        throw PreconditionError("partition does not cover the graph");

    Graph padded(p.padded_size());
    for (auto [u, v] : g.edges())
        padded.add_edge(u, v);
    Bipartition comp = bipartite_complement(padded, p.block(0), p.block(1));
    MatchingResult mr = perfect_matching(comp);
    if (!mr.matching) {
        std::ostringstream dump;
        dump << "violator=[";
        for (size_t i = 0; i < mr.violator.size(); ++i)
            dump << (i ? " " : "") << mr.violator[i];
        dump << "] neighborhood=[";
        for (size_t i = 0; i < mr.violator_neighborhood.size(); ++i)
            dump << (i ? " " : "") << mr.violator_neighborhood[i];
        dump << "] k=" << k << " delta=" << delta;
        throw InternalContradiction(
            "no perfect matching in bipartite complement despite k >= 2*delta", dump.str());
    }
    StrongColoring c;
    c.color.assign(p.padded_size(), -1);
    const auto& match = *mr.matching;
    for (int i = 0; i < k; ++i) {
        c.color[p.block(0)[i]] = i;
        c.color[p.block(1)[match[i]]] = i;
    }
    VerifyResult vr = verify_strong_coloring(g, p, c);
    if (!vr)
        throw InternalContradiction("two-block coloring failed verification", vr.describe());
    return c;
}

} // namespace strongcolor
