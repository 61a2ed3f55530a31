#include "strongcolor/engine.hpp"

#include "strongcolor/errors.hpp"
#include "strongcolor/matching.hpp"

#include <algorithm>
#include <sstream>

namespace strongcolor {

namespace {

void append_vec(std::ostringstream& os, const char* name, const std::vector<int>& v)
{
    os << " " << name << "=[";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    os << "]";
}

std::string pivots_str(const Pivots& piv)
{
    std::ostringstream os;
    os << "pivots=[" << piv.v[0] << " " << piv.v[1] << " " << piv.v[2] << "]";
    return os.str();
}

bool in_swap_set(const PartialColoring& chi, const Pivots& piv, int b, int v)
{
    if (chi.partition().block_of(v) != b)
        return false;
    const int c = chi.color_of(v);
    return c < 0 || !chi.neighbor_has_color(piv.v[b], c);
}

void require_member(const PartialColoring& chi, const Pivots& piv, int b, int v,
                    const char* who)
{
    if (!in_swap_set(chi, piv, b, v))
        throw PreconditionError(std::string(who) + ": vertex " + std::to_string(v)
            + " is not in the swap set of block " + std::to_string(b));
}

bool partially_multicolored(const PartialColoring& chi, const std::array<int, 3>& x)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int ci = chi.color_of(x[i]), cj = chi.color_of(x[j]);
            if (ci >= 0 && ci == cj)
                return false;
        }
    return true;
}

void require_pivots_uncolored(const PartialColoring& chi, const Pivots& piv)
{
    for (int b = 0; b < 3; ++b) {
        if (chi.partition().block_of(piv.v[b]) != b)
            throw PreconditionError("pivot " + std::to_string(piv.v[b])
                + " is not in block " + std::to_string(b));
        if (chi.is_colored(piv.v[b]))
            throw PreconditionError("pivot " + std::to_string(piv.v[b]) + " is colored");
    }
}

int pivot_edge_count(const Graph& g, const Pivots& piv)
{
    int e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.has_edge(piv.v[i], piv.v[j]))
                ++e;
    return e;
}

// Substitute v_b for x inside x's color class; legal exactly when x sits in
// the swap set of block b.
void substitute_pivot(PartialColoring& chi, const Pivots& piv, int b, int x)
{
    const int c = chi.color_of(x);
    if (c < 0)
        return;
    auto members = chi.class_members(c);
    if (members[b] != x)
        throw InternalContradiction("colored swap-set vertex not at its block position",
            chi.dump() + " " + pivots_str(piv));
    members[b] = piv.v[b];
    chi.replace_class(c, members);
}

struct QMaximizer {
    int count = -1;
    int vertex = -1;
    int from_block = -1;
    int to_block = -1;
};

// q = max |N(x) cap X_j| over x in X_i, i != j. Ties go to the lowest
// vertex id, then lowest block pair, for reproducibility.
QMaximizer find_q_maximizer(const Graph& g, const SwapSets& swap,
                            const std::vector<std::array<char, 3>>& in_x)
{
    QMaximizer best;
    for (int bi = 0; bi < 3; ++bi) {
        for (int x : swap.x[bi]) {
            std::array<int, 3> tally{0, 0, 0};
            for (int u : g.neighbors(x))
                for (int b = 0; b < 3; ++b)
                    if (in_x[u][b])
                        ++tally[b];
            for (int bj = 0; bj < 3; ++bj) {
                if (bj == bi)
                    continue;
                const int cnt = tally[bj];
                const bool better = cnt > best.count
                    || (cnt == best.count
                        && (x < best.vertex
                            || (x == best.vertex
                                && (bi < best.from_block
                                    || (bi == best.from_block && bj < best.to_block)))));
                if (better)
                    best = {cnt, x, bi, bj};
            }
        }
    }
    return best;
}

std::vector<std::array<char, 3>> membership_table(const PartialColoring& chi,
                                                  const SwapSets& swap)
{
    std::vector<std::array<char, 3>> in_x(chi.partition().padded_size(),
        std::array<char, 3>{0, 0, 0});
    for (int b = 0; b < 3; ++b)
        for (int v : swap.x[b])
            in_x[v][b] = 1;
    return in_x;
}

std::string swap_sets_str(const SwapSets& swap)
{
    std::ostringstream os;
    for (int b = 0; b < 3; ++b) {
        os << (b ? " " : "");
        append_vec(os, ("X" + std::to_string(b + 1)).c_str(), swap.x[b]);
    }
    return os.str();
}

} // namespace

PartialColoring::PartialColoring(const Graph& g, const BlockPartition& p)
    : g_(&g), p_(&p)
{
    if (p.block_count() != 3)
        throw PreconditionError("partial strong coloring requires exactly 3 blocks");
    if (g.vertex_count() != p.padded_size())
        throw PreconditionError("graph must be padded to the partition cover");
    color_.assign(p.padded_size(), -1);
    uncolored_ = {p.block_size(), p.block_size(), p.block_size()};
}

const std::array<int, 3>& PartialColoring::class_members(int c) const
{
    if (c < 0 || c >= class_count())
        throw PreconditionError("color " + std::to_string(c) + " not in use");
    return classes_[c];
}

int PartialColoring::lowest_uncolored(int b) const
{
    for (int v : p_->block(b))
        if (color_[v] < 0)
            return v;
    return -1;
}

bool PartialColoring::complete() const
{
    return uncolored_[0] == 0 && uncolored_[1] == 0 && uncolored_[2] == 0;
}

bool PartialColoring::neighbor_has_color(int v, int c) const
{
    for (int u : g_->neighbors(v))
        if (color_[u] == c)
            return true;
    return false;
}

void PartialColoring::assign(int v, int c, int block)
{
    if (color_[v] != -1)
        throw InternalContradiction("vertex " + std::to_string(v)
                + " already colored during class edit",
            dump());
    color_[v] = c;
    --uncolored_[block];
}

void PartialColoring::unassign(int v, int block)
{
    if (color_[v] < 0)
        throw InternalContradiction("vertex " + std::to_string(v)
                + " not colored during class edit",
            dump());
    color_[v] = -1;
    ++uncolored_[block];
}

void PartialColoring::replace_class(int c, const std::array<int, 3>& members)
{
    if (c < 0 || c >= class_count())
        throw PreconditionError("color " + std::to_string(c) + " not in use");
    for (int b = 0; b < 3; ++b)
        if (p_->block_of(members[b]) != b)
            throw PreconditionError("class member " + std::to_string(members[b])
                + " is not in block " + std::to_string(b));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g_->has_edge(members[i], members[j]))
                throw InternalContradiction("replacement class {"
                        + std::to_string(members[0]) + " " + std::to_string(members[1])
                        + " " + std::to_string(members[2]) + "} is not independent",
                    dump());
    const std::array<int, 3> old = classes_[c];
    for (int b = 0; b < 3; ++b)
        unassign(old[b], b);
    for (int b = 0; b < 3; ++b)
        assign(members[b], c, b);
    classes_[c] = members;
    ++edits_;
#ifndef NDEBUG
    validate();
#endif
}

int PartialColoring::add_class(const std::array<int, 3>& members)
{
    for (int b = 0; b < 3; ++b)
        if (p_->block_of(members[b]) != b)
            throw PreconditionError("class member " + std::to_string(members[b])
                + " is not in block " + std::to_string(b));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g_->has_edge(members[i], members[j]))
                throw InternalContradiction("new class {" + std::to_string(members[0])
                        + " " + std::to_string(members[1]) + " "
                        + std::to_string(members[2]) + "} is not independent",
                    dump());
    const int c = class_count();
    for (int b = 0; b < 3; ++b)
        assign(members[b], c, b);
    classes_.push_back(members);
    ++edits_;
#ifndef NDEBUG
    validate();
#endif
    return c;
}

void PartialColoring::validate() const
{
    std::array<int, 3> uncounted{0, 0, 0};
    std::vector<int> expect(color_.size(), -1);
    for (int c = 0; c < class_count(); ++c) {
        const auto& m = classes_[c];
        for (int b = 0; b < 3; ++b) {
            if (p_->block_of(m[b]) != b)
                throw InternalContradiction("class member in wrong block", dump());
            if (expect[m[b]] != -1)
                throw InternalContradiction("vertex in two classes", dump());
            expect[m[b]] = c;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g_->has_edge(m[i], m[j]))
                    throw InternalContradiction("color class "
                            + std::to_string(c) + " is not independent",
                        dump());
    }
    for (size_t v = 0; v < color_.size(); ++v)
        if (color_[v] != expect[v])
            throw InternalContradiction("color map out of sync with classes", dump());
    for (int b = 0; b < 3; ++b) {
        for (int v : p_->block(b))
            if (color_[v] < 0)
                ++uncounted[b];
        if (uncounted[b] != uncolored_[b])
            throw InternalContradiction("uncolored counter out of sync", dump());
    }
    if (uncolored_[0] != uncolored_[1] || uncolored_[1] != uncolored_[2])
        throw InternalContradiction("uncolored counts differ between blocks", dump());
}

StrongColoring PartialColoring::to_strong_coloring() const
{
    if (!complete())
        throw PreconditionError("partial coloring is not complete");
    return StrongColoring{color_};
}

std::string PartialColoring::dump() const
{
    std::ostringstream os;
    os << "{\"class_count\":" << class_count() << ",\"k\":" << p_->block_size()
       << ",\"color\":[";
    for (size_t v = 0; v < color_.size(); ++v)
        os << (v ? "," : "") << color_[v];
    os << "],\"uncolored\":[" << uncolored_[0] << "," << uncolored_[1] << ","
       << uncolored_[2] << "]}";
    return os.str();
}

SwapSets compute_swap_sets(const Graph& g, const BlockPartition& p,
                           const PartialColoring& chi, const Pivots& piv)
{
    if (p.block_count() != 3)
        throw PreconditionError("swap sets need 3 blocks");
    require_pivots_uncolored(chi, piv);
    SwapSets s;
    for (int b = 0; b < 3; ++b) {
        const int v = piv.v[b];
        std::vector<char> color_near(chi.class_count(), 0);
        int t = 0;
        for (int u : g.neighbors(v)) {
            const int c = chi.color_of(u);
            if (c >= 0)
                color_near[c] = 1;
            if (u == piv.v[0] || u == piv.v[1] || u == piv.v[2])
                ++t;
        }
        for (int u : p.block(b)) {
            const int c = chi.color_of(u);
            if (c < 0 || !color_near[c])
                s.x[b].push_back(u);
        }
        s.t[b] = t;
        // every excluded vertex spends one distinct color that sits on a
        // colored neighbor of v, so |X_b| >= k - deg(v) + t
        const int bound = p.block_size() - g.degree(v) + t;
        if (static_cast<int>(s.x[b].size()) < bound) {
            std::ostringstream os;
            os << pivots_str(piv) << " block=" << b << " bound=" << bound;
            append_vec(os, "X", s.x[b]);
            throw InternalContradiction("swap set smaller than its size bound",
                chi.dump() + " " + os.str());
        }
    }
    return s;
}

void uncolor_triple(PartialColoring& chi, const Pivots& piv, const std::array<int, 3>& x)
{
    require_pivots_uncolored(chi, piv);
    for (int b = 0; b < 3; ++b)
        require_member(chi, piv, b, x[b], "uncolor_triple");
    if (!partially_multicolored(chi, x))
        throw PreconditionError("uncolor_triple: triple has a repeated color");
    for (int b = 0; b < 3; ++b)
        substitute_pivot(chi, piv, b, x[b]);
}

void enlarge_independent_multicolored(PartialColoring& chi, const Pivots& piv,
                                      const std::array<int, 3>& x)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (chi.graph().has_edge(x[i], x[j]))
                throw PreconditionError("triple is not independent");
    uncolor_triple(chi, piv, x);
    chi.add_class(x);
}

void enlarge_quadruple(PartialColoring& chi, const Pivots& piv,
                       int bi, int xi, int xi2, int bj, int xj, int bk, int xk)
{
    require_pivots_uncolored(chi, piv);
    if (bi == bj || bj == bk || bi == bk || bi < 0 || bj < 0 || bk < 0 || bi > 2
        || bj > 2 || bk > 2)
        throw PreconditionError("enlarge_quadruple: block roles must be a permutation");
    if (xi == xi2)
        throw PreconditionError("enlarge_quadruple: the doubled vertices must differ");
    require_member(chi, piv, bi, xi, "enlarge_quadruple");
    require_member(chi, piv, bi, xi2, "enlarge_quadruple");
    require_member(chi, piv, bj, xj, "enlarge_quadruple");
    require_member(chi, piv, bk, xk, "enlarge_quadruple");
    {
        const int cj = chi.color_of(xj), ck = chi.color_of(xk);
        if (cj >= 0 && cj == ck)
            throw PreconditionError("enlarge_quadruple: {xj, xk} shares a color");
    }
    const Graph& g = chi.graph();
    if (g.has_edge(xj, xk) || g.has_edge(xi, xj) || g.has_edge(xi, xk)
        || g.has_edge(xi2, xj) || g.has_edge(xi2, xk))
        throw PreconditionError("enlarge_quadruple: a required triple is not independent");

    std::array<int, 3> triple{};
    triple[bi] = xi;
    triple[bj] = xj;
    triple[bk] = xk;
    if (partially_multicolored(chi, triple)) {
        enlarge_independent_multicolored(chi, piv, triple);
        return;
    }
    triple[bi] = xi2;
    if (partially_multicolored(chi, triple)) {
        enlarge_independent_multicolored(chi, piv, triple);
        return;
    }

    // Neither triple is multicolored, so one doubled vertex repeats xk's
    // color and the other repeats xj's; normalize xi to the xk side.
    if (chi.color_of(xi) != chi.color_of(xk))
        std::swap(xi, xi2);
    const int a = chi.color_of(xi);
    const int b = chi.color_of(xi2);
    if (a < 0 || b < 0 || a != chi.color_of(xk) || b != chi.color_of(xj) || a == b)
        throw InternalContradiction("enlarge_quadruple: clash pattern impossible",
            chi.dump() + " " + pivots_str(piv));

    std::array<int, 3> new_a = chi.class_members(a);
    new_a[bk] = piv.v[bk]; // {a_i, a_j, v_k}
    std::array<int, 3> new_b = chi.class_members(b);
    new_b[bj] = piv.v[bj]; // {b_i, v_j, b_k}
    std::array<int, 3> fresh{};
    fresh[bi] = piv.v[bi];
    fresh[bj] = xj;
    fresh[bk] = xk; // {v_i, b_j, a_k}
    chi.replace_class(a, new_a);
    chi.replace_class(b, new_b);
    chi.add_class(fresh);
}

StepOutcome resolve_mixed_triple(PartialColoring& chi, const Pivots& piv,
                                 const std::array<int, 3>& x)
{
    require_pivots_uncolored(chi, piv);
    const Graph& g = chi.graph();
    for (int b = 0; b < 3; ++b)
        require_member(chi, piv, b, x[b], "resolve_mixed_triple");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.has_edge(x[i], x[j]))
                throw PreconditionError("resolve_mixed_triple: triple is not independent");
    const int e = pivot_edge_count(g, piv);
    if (e != 1 && e != 2)
        throw PreconditionError("resolve_mixed_triple: pivots must induce 1 or 2 edges");

    if (partially_multicolored(chi, x)) {
        enlarge_independent_multicolored(chi, piv, x);
        return StepOutcome{true, piv};
    }

    const std::array<int, 3> col{chi.color_of(x[0]), chi.color_of(x[1]),
        chi.color_of(x[2])};

    if (col[0] >= 0 && col[0] == col[1] && col[1] == col[2]) {
        // one class splits in two; roles follow the first block permutation
        // with v_r1 ~ v_r2 and v_r2 !~ v_r3
        int r1 = -1, r2 = -1, r3 = -1;
        static const int perms[6][3]
            = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& pm : perms) {
            if (g.has_edge(piv.v[pm[0]], piv.v[pm[1]])
                && !g.has_edge(piv.v[pm[1]], piv.v[pm[2]])) {
                r1 = pm[0];
                r2 = pm[1];
                r3 = pm[2];
                break;
            }
        }
        if (r1 < 0)
            throw InternalContradiction("no admissible pivot labeling",
                chi.dump() + " " + pivots_str(piv));
        const int a = col[0];
        std::array<int, 3> first{};
        first[r1] = x[r1];
        first[r2] = piv.v[r2];
        first[r3] = piv.v[r3]; // {x_1, v_2, v_3}
        std::array<int, 3> second{};
        second[r1] = piv.v[r1];
        second[r2] = x[r2];
        second[r3] = x[r3]; // {v_1, x_2, x_3}
        chi.replace_class(a, first);
        chi.add_class(second);
        return StepOutcome{true, piv};
    }

    // exactly one repeated pair (p, q); r is the remaining block
    int p = -1, q = -1;
    for (int i = 0; i < 3 && p < 0; ++i)
        for (int j = i + 1; j < 3 && p < 0; ++j)
            if (col[i] >= 0 && col[i] == col[j]) {
                p = i;
                q = j;
            }
    const int r = 3 - p - q;
    const int a = col[p];

    if (g.has_edge(piv.v[p], piv.v[q])) {
        // repeated pair sits on the pivot edge
        const bool rp = g.has_edge(x[r], piv.v[p]);
        const bool rq = g.has_edge(x[r], piv.v[q]);
        if (rp && rq) {
            substitute_pivot(chi, piv, r, x[r]);
            Pivots next = piv;
            next.v[r] = x[r]; // {v_p, v_q, x_r} induces a triangle
            return StepOutcome{false, next};
        }
        if (!rp) {
            substitute_pivot(chi, piv, r, x[r]);
            std::array<int, 3> repl = chi.class_members(a);
            repl[q] = piv.v[q]; // {x_p, v_q, a_r}
            std::array<int, 3> fresh{};
            fresh[p] = piv.v[p];
            fresh[q] = x[q];
            fresh[r] = x[r]; // {v_p, x_q, x_r}
            chi.replace_class(a, repl);
            chi.add_class(fresh);
            return StepOutcome{true, piv};
        }
        // x_r ~ v_p, x_r !~ v_q
        std::array<int, 3> repl = chi.class_members(a);
        repl[p] = piv.v[p]; // {v_p, x_q, a_r}
        chi.replace_class(a, repl);
        substitute_pivot(chi, piv, r, x[r]);
        std::array<int, 3> fresh{};
        fresh[p] = x[p];
        fresh[q] = piv.v[q];
        fresh[r] = x[r]; // {x_p, v_q, x_r}
        chi.add_class(fresh);
        return StepOutcome{true, piv};
    }

    // repeated pair off the pivot edge: split around {a_r, v_p, v_q}
    std::array<int, 3> repl = chi.class_members(a);
    repl[p] = piv.v[p];
    repl[q] = piv.v[q]; // {a_r, v_p, v_q}
    chi.replace_class(a, repl);
    if (col[r] >= 0) {
        std::array<int, 3> other = chi.class_members(col[r]);
        other[r] = piv.v[r]; // {v_r, b_p, b_q}
        chi.replace_class(col[r], other);
    }
    chi.add_class(x);
    return StepOutcome{true, piv};
}

void case1_enlarge(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                   const Pivots& piv)
{
    if (pivot_edge_count(g, piv) != 3)
        throw PreconditionError("case 1 needs a pivot triangle");
    const SwapSets swap = compute_swap_sets(g, p, chi, piv);
    const auto in_x = membership_table(chi, swap);
    const QMaximizer qm = find_q_maximizer(g, swap, in_x);

    auto contradiction = [&](const char* what) -> InternalContradiction {
        std::ostringstream os;
        os << chi.dump() << " " << pivots_str(piv) << " " << swap_sets_str(swap)
           << " q=" << qm.count << " q_vertex=" << qm.vertex << " from=" << qm.from_block
           << " to=" << qm.to_block;
        return InternalContradiction(std::string("case 1: ") + what, os.str());
    };

    if (qm.vertex < 0)
        throw contradiction("empty swap sets");
    const int r1 = qm.from_block, r2 = qm.to_block, r3 = 3 - r1 - r2;
    const int x1 = qm.vertex;
    const int c1 = chi.color_of(x1);

    int x2 = -1;
    for (int cand : swap.x[r2]) {
        if (g.has_edge(x1, cand))
            continue;
        if (c1 >= 0 && chi.color_of(cand) == c1)
            continue;
        x2 = cand;
        break;
    }
    if (x2 < 0)
        throw contradiction("no admissible second vertex");

    std::vector<int> s;
    for (int cand : swap.x[r3])
        if (!g.has_edge(cand, x1) && !g.has_edge(cand, x2))
            s.push_back(cand);
    // |S| >= |X_3| - (delta - q) - q >= 2 under the pivot triangle
    if (s.size() < 2)
        throw contradiction("fewer than two choices for the doubled block");

    enlarge_quadruple(chi, piv, r3, s[0], s[1], r1, x1, r2, x2);
}

StepOutcome case2_step(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                       const Pivots& piv)
{
    if (pivot_edge_count(g, piv) != 2)
        throw PreconditionError("case 2 needs pivots inducing exactly two edges");
    const SwapSets swap = compute_swap_sets(g, p, chi, piv);
    const auto in_x = membership_table(chi, swap);
    const QMaximizer qm = find_q_maximizer(g, swap, in_x);

    auto contradiction = [&](const char* what) -> InternalContradiction {
        std::ostringstream os;
        os << chi.dump() << " " << pivots_str(piv) << " " << swap_sets_str(swap)
           << " q=" << qm.count << " q_vertex=" << qm.vertex;
        return InternalContradiction(std::string("case 2: ") + what, os.str());
    };

    if (qm.vertex < 0)
        throw contradiction("empty swap sets");
    const int bi = qm.from_block, bj = qm.to_block, bk = 3 - bi - bj;
    const int xi = qm.vertex;

    int xj = -1;
    for (int cand : swap.x[bj])
        if (!g.has_edge(xi, cand)) {
            xj = cand;
            break;
        }
    if (xj < 0)
        throw contradiction("no second vertex outside N(x_i)");

    int xk = -1;
    for (int cand : swap.x[bk])
        if (!g.has_edge(cand, xi) && !g.has_edge(cand, xj)) {
            xk = cand;
            break;
        }
    // |X_k \ (N(x_i) u N(x_j))| >= |X_k| - (delta - q) - q >= 1
    if (xk < 0)
        throw contradiction("no third vertex avoiding both neighborhoods");

    std::array<int, 3> triple{};
    triple[bi] = xi;
    triple[bj] = xj;
    triple[bk] = xk;
    return resolve_mixed_triple(chi, piv, triple);
}

StepOutcome case3_step(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                       const Pivots& piv)
{
    if (pivot_edge_count(g, piv) != 1)
        throw PreconditionError("case 3 needs pivots inducing exactly one edge");
    int be1 = -1, be2 = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.has_edge(piv.v[i], piv.v[j])) {
                be1 = i;
                be2 = j;
            }
    const int b3 = 3 - be1 - be2;

    const SwapSets swap = compute_swap_sets(g, p, chi, piv);
    const auto in_x = membership_table(chi, swap);

    // Transversal paths with the middle in a pivot-edge block are always
    // usable: the two non-middle pivots are nonadjacent.
    for (int bm : {be1, be2}) {
        std::array<int, 2> others{};
        int w = 0;
        for (int b = 0; b < 3; ++b)
            if (b != bm)
                others[w++] = b;
        for (int m : swap.x[bm]) {
            int e1 = -1, e2 = -1;
            for (int u : g.neighbors(m)) {
                if (e1 < 0 && in_x[u][others[0]])
                    e1 = u;
                if (e2 < 0 && in_x[u][others[1]])
                    e2 = u;
            }
            if (e1 < 0 || e2 < 0)
                continue;
            std::array<int, 3> path{};
            path[bm] = m;
            path[others[0]] = e1;
            path[others[1]] = e2;
            if (partially_multicolored(chi, path)) {
                uncolor_triple(chi, piv, path);
                return StepOutcome{false, Pivots{path}};
            }
            // repeats can only sit on the end vertices (the middle is
            // adjacent to both ends, so it never shares their color)
            const int a = chi.color_of(e1);
            if (a < 0 || chi.color_of(e2) != a)
                throw InternalContradiction("path ends expected to share a color",
                    chi.dump() + " " + pivots_str(piv));
            std::array<int, 3> repl = chi.class_members(a);
            repl[others[0]] = piv.v[others[0]];
            repl[others[1]] = piv.v[others[1]]; // {a_m, v_o1, v_o2}
            chi.replace_class(a, repl);
            substitute_pivot(chi, piv, bm, m); // also handles uncolored m
            return StepOutcome{false, Pivots{path}};
        }
    }

    // Middles in the off-edge block only help when the path is multicolored.
    int residual_color = -1;
    for (int m : swap.x[b3]) {
        std::vector<int> ends1, ends2;
        for (int u : g.neighbors(m)) {
            if (in_x[u][be1])
                ends1.push_back(u);
            if (in_x[u][be2])
                ends2.push_back(u);
        }
        for (int e1 : ends1) {
            for (int e2 : ends2) {
                std::array<int, 3> path{};
                path[be1] = e1;
                path[be2] = e2;
                path[b3] = m;
                if (partially_multicolored(chi, path)) {
                    uncolor_triple(chi, piv, path);
                    return StepOutcome{false, Pivots{path}};
                }
                if (residual_color < 0)
                    residual_color = chi.color_of(e1);
            }
        }
    }

    // No usable path: the swap-set structure guarantees an independent
    // transversal; search exhaustively and delegate.
    for (int x1 : swap.x[0]) {
        for (int x2 : swap.x[1]) {
            if (g.has_edge(x1, x2))
                continue;
            for (int x3 : swap.x[2]) {
                if (g.has_edge(x1, x3) || g.has_edge(x2, x3))
                    continue;
                return resolve_mixed_triple(chi, piv, {x1, x2, x3});
            }
        }
    }

    // The residual configuration is ruled out by a counting argument; dump
    // the full state including the complete-bipartite component between the
    // edge-block swap sets.
    std::ostringstream os;
    os << chi.dump() << " " << pivots_str(piv) << " " << swap_sets_str(swap);
    {
        std::vector<char> in_f(g.vertex_count(), 0);
        std::vector<int> queue{piv.v[be1]};
        in_f[piv.v[be1]] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            const int ub = p.block_of(u);
            const int other = ub == be1 ? be2 : be1;
            for (int w2 : g.neighbors(u))
                if (in_x[w2][other] && !in_f[w2]) {
                    in_f[w2] = 1;
                    queue.push_back(w2);
                }
        }
        std::vector<int> f1, f2, a1, a2;
        for (int v : swap.x[be1])
            (in_f[v] ? f1 : a1).push_back(v);
        for (int v : swap.x[be2])
            (in_f[v] ? f2 : a2).push_back(v);
        append_vec(os, "B1", f1);
        append_vec(os, "B2", f2);
        append_vec(os, "A1", a1);
        append_vec(os, "A2", a2);
        os << " uncolored_per_block=" << chi.uncolored_in_block(0);
        os << " residual_color=" << residual_color;
        if (residual_color >= 0) {
            int nu = 0;
            for (int u : g.neighbors(piv.v[b3]))
                if (chi.color_of(u) >= 0 && chi.color_of(u) != residual_color)
                    ++nu;
            os << " nu=" << nu;
        }
    }
    throw InternalContradiction(
        "case 3.3: no usable transversal path and no independent transversal", os.str());
}

void enlarge_once(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                  EngineStats* stats)
{
    chi.mark_edits();
    const int before = chi.class_count();
    Pivots piv{};
    for (int b = 0; b < 3; ++b) {
        piv.v[b] = chi.lowest_uncolored(b);
        if (piv.v[b] < 0)
            throw PreconditionError("block " + std::to_string(b)
                + " has no uncolored vertex");
    }
    int chain = 0;
    while (true) {
        ++chain;
        if (chain > 3)
            throw InternalContradiction("case chain exceeded three steps",
                chi.dump() + " " + pivots_str(piv));
        const int e = pivot_edge_count(g, piv);
        if (e == 0) {
            chi.add_class(piv.v);
            if (stats)
                ++stats->direct;
            break;
        }
        if (e == 3) {
            case1_enlarge(g, p, chi, piv);
            if (stats)
                ++stats->case1;
            break;
        }
        StepOutcome out;
        if (e == 2) {
            out = case2_step(g, p, chi, piv);
            if (stats)
                ++stats->case2;
        } else {
            out = case3_step(g, p, chi, piv);
            if (stats)
                ++stats->case3;
        }
        if (out.enlarged)
            break;
        piv = out.pivots;
        if (stats)
            ++stats->repivots;
    }
    if (chi.class_count() != before + 1)
        throw InternalContradiction("enlarge step must add exactly one class",
            chi.dump());
    if (chi.edits_since_mark() > 12)
        throw InternalContradiction("class-replacement edits exceeded 12 in one step",
            chi.dump());
    if (stats) {
        ++stats->enlarge_calls;
        stats->max_chain = std::max(stats->max_chain, chain);
        stats->max_edits = std::max(stats->max_edits, chi.edits_since_mark());
    }
}

StrongColoring strong_coloring(const Graph& g, const BlockPartition& p,
                               EngineStats* stats)
{
    const int n = g.vertex_count();
    const int t = p.block_count();
    if (t == 0) {
        if (n == 0)
            return StrongColoring{};
        throw PreconditionError("empty partition for a non-empty graph");
    }
    const int k = p.block_size();
    const int want_blocks = (n + k - 1) / k;
    if (t != want_blocks)
        throw PreconditionError("partition has " + std::to_string(t)
            + " blocks, padded graph needs " + std::to_string(want_blocks));
    const int delta = max_degree(g);
    if (k < 2 * delta)
        throw UnsupportedRegime("block size " + std::to_string(k)
            + " below 2 * max degree = " + std::to_string(2 * delta));
    if (t > 3)
        throw UnsupportedRegime("more than 3 blocks (" + std::to_string(t) + ")");

    StrongColoring c;
    if (t == 1) {
        c.color.assign(k, -1);
        const auto& block = p.block(0);
        for (int i = 0; i < k; ++i)
            c.color[block[i]] = i;
    } else if (t == 2) {
        c = two_block_coloring(g, p, stats);
    } else {
        Graph padded(p.padded_size());
        for (auto [u, v] : g.edges())
            padded.add_edge(u, v);
        PartialColoring chi(padded, p);
        while (!chi.complete())
            enlarge_once(padded, p, chi, stats);
        c = chi.to_strong_coloring();
    }
    VerifyResult vr = verify_strong_coloring(g, p, c);
    if (!vr)
        throw InternalContradiction("solver output failed verification", vr.describe());
    return c;
}

} // namespace strongcolor
