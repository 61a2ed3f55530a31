#pragma once

#include "strongcolor/graph.hpp"

#include <functional>
#include <optional>

namespace strongcolor {

/// Caps for the exact searches. Hitting any cap raises ResourceExceeded;
/// the oracle never degrades to a wrong answer.
struct OracleBudget {
    int max_vertices = 12;
    long max_partitions = 1'000'000;
    long node_limit = 100'000'000;
};

/// Exhaustive backtracking over block bijections with block 1 pinned to the
/// identity coloring (colors are interchangeable, so no solution is lost).
/// Returns a witness coloring or std::nullopt as proof-by-exhaustion.
std::optional<StrongColoring> color_partition_exact(const Graph& g,
                                                    const BlockPartition& p,
                                                    const OracleBudget& budget = {});

struct AllPartitionsResult {
    bool colorable = false;
    std::optional<BlockPartition> witness; // first failing partition
};

/// Enumerates every unordered equal-block partition of the padded vertex
/// set in canonical order and checks each with color_partition_exact.
AllPartitionsResult strongly_colorable_all_partitions(const Graph& g, int r,
                                                      const OracleBudget& budget = {});

/// Smallest r such that g is strongly r-colorable, scanned upward from
/// max_degree + 1 (the universal lower bound; colorability is monotone in r).
int exact_strong_chromatic_number(const Graph& g, const OracleBudget& budget = {});

/// Canonical enumeration of set partitions of {0..n-1} into t unordered
/// blocks of size k (the lowest unassigned vertex opens or joins a block).
/// The callback returns true to stop; returns whether it ever did.
bool for_each_equal_partition(int n, int t, int k,
                              const std::function<bool(const std::vector<std::vector<int>>&)>& fn,
                              long max_partitions = 1'000'000);

} // namespace strongcolor
