#pragma once

#include "strongcolor/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace strongcolor {

/// One uncolored vertex per block, pivots of an enlargement step.
struct Pivots {
    std::array<int, 3> v;
};

/// Swap sets relative to the current pivots: X[i] holds every vertex of
/// block i that is uncolored or whose color is absent from N(v_i).
/// t[i] counts the neighbors of v_i among the pivots; the size bound
/// |X_i| >= k - deg(v_i) + t_i is checked on construction.
struct SwapSets {
    std::array<std::vector<int>, 3> x;
    std::array<int, 3> t;
};

/// Counters filled during a solver run.
struct EngineStats {
    int enlarge_calls = 0;
    int max_chain = 0;     // longest case chain inside one enlarge_once
    int max_edits = 0;     // most class-replacement edits in one enlarge_once
    long direct = 0;       // independent pivots colored directly
    long case1 = 0;
    long case2 = 0;
    long case3 = 0;
    long repivots = 0;
};

/// Partial proper coloring whose color classes are block transversals:
/// every used color appears exactly once per block. Counts of uncolored
/// vertices stay equal across the three blocks through every mutation.
class PartialColoring {
public:
    /// g must already cover the padded vertex set of p; p must have 3 blocks.
    PartialColoring(const Graph& g, const BlockPartition& p);

    const Graph& graph() const { return *g_; }
    const BlockPartition& partition() const { return *p_; }

    int color_of(int v) const { return color_[v]; }
    bool is_colored(int v) const { return color_[v] >= 0; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::array<int, 3>& class_members(int c) const;
    int uncolored_in_block(int b) const { return uncolored_[b]; }
    int lowest_uncolored(int b) const;
    bool complete() const;

    /// Does v have a neighbor currently colored c?
    bool neighbor_has_color(int v, int c) const;

    /// Replace the members of color class c; one class-replacement edit.
    void replace_class(int c, const std::array<int, 3>& members);
    /// Open a fresh color (smallest unused id); one edit. Returns the color.
    int add_class(const std::array<int, 3>& members);

    void mark_edits() { edit_mark_ = edits_; }
    int edits_since_mark() const { return edits_ - edit_mark_; }

    /// Full invariant check: properness per class, one member per block,
    /// equal uncolored counts. Throws InternalContradiction on violation.
    void validate() const;

    StrongColoring to_strong_coloring() const;
    std::string dump() const;

private:
    void assign(int v, int c, int block);
    void unassign(int v, int block);

    const Graph* g_;
    const BlockPartition* p_;
    std::vector<int> color_;
    std::vector<std::array<int, 3>> classes_;
    std::array<int, 3> uncolored_{};
    int edits_ = 0;
    int edit_mark_ = 0;
};

/// Result of a lemma-level step: either the coloring gained a class, or it
/// was rearranged (same class count) around a new pivot triple.
struct StepOutcome {
    bool enlarged = false;
    Pivots pivots{};
};

SwapSets compute_swap_sets(const Graph& g, const BlockPartition& p,
                           const PartialColoring& chi, const Pivots& piv);

/// Color switches: make x_1, x_2, x_3 uncolored without losing a class by
/// substituting v_i for each colored x_i inside its class. Requires the
/// x triple partially multicolored with x_i in X_i.
void uncolor_triple(PartialColoring& chi, const Pivots& piv,
                    const std::array<int, 3>& x);

/// Independent partially multicolored transversal -> one more class.
void enlarge_independent_multicolored(PartialColoring& chi, const Pivots& piv,
                                      const std::array<int, 3>& x);

/// Four-vertex enlargement: xi, xi2 in X_bi, xj in X_bj, xk in X_bk with
/// {xj, xk} partially multicolored and both triples independent.
void enlarge_quadruple(PartialColoring& chi, const Pivots& piv,
                       int bi, int xi, int xi2, int bj, int xj, int bk, int xk);

/// Independent transversal against pivots inducing one or two edges:
/// enlarges, or hands back an uncolored pivot triangle.
StepOutcome resolve_mixed_triple(PartialColoring& chi, const Pivots& piv,
                                 const std::array<int, 3>& x);

/// Pivot triangle: always enlarges via the extremal quadruple choice.
void case1_enlarge(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                   const Pivots& piv);

/// Pivots inducing exactly two edges: enlarges or repivots to a triangle.
StepOutcome case2_step(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                       const Pivots& piv);

/// Pivots inducing exactly one edge: transversal-path analysis; enlarges or
/// repivots into the two- or three-edge case.
StepOutcome case3_step(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                       const Pivots& piv);

/// One outer step: picks lowest-id uncolored pivots and runs the case chain
/// (at most 3 cases, at most 12 class edits) until the class count grows.
void enlarge_once(const Graph& g, const BlockPartition& p, PartialColoring& chi,
                  EngineStats* stats = nullptr);

/// Top-level solver. p must partition pad_with_isolated(g, k) into
/// t in {1, 2, 3} blocks with k >= 2 * max_degree(g); the result passes
/// verify_strong_coloring. Throws UnsupportedRegime otherwise.
StrongColoring strong_coloring(const Graph& g, const BlockPartition& p,
                               EngineStats* stats = nullptr);

} // namespace strongcolor
