#pragma once

#include "strongcolor/graph.hpp"
#include "strongcolor/triangle_factor.hpp"

#include <cstdint>

namespace strongcolor {

/// SplitMix64 (Steele, Lea & Flood's mix of Stafford's MurmurHash3
/// finalizer, variant 13). Byte-level behavior, so corpora reproduce across
/// implementations: state advances by 0x9E3779B97F4A7C15 per draw and the
/// returned value is the mixed pre-advance state; below(b) reduces a draw
/// modulo b.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

private:
    uint64_t state_;
};

/// Disjoint union of K_{delta,delta} on {0..2*delta-1} and n - 2*delta
/// isolated vertices. Requires 2*delta <= n.
Graph lower_bound_graph(int delta, int n);

/// Refutation layout at block size r: block 1 holds the whole left side
/// {0..delta-1}, block 2 the whole right side {delta..2*delta-1}; filler
/// vertices are packed in ascending id order. Requires r >= delta.
BlockPartition adversarial_partition(int delta, int n, int r);

/// Random graph with max degree exactly delta_target (at least one vertex
/// attains it), deterministic in seed. Requires n >= delta_target + 1.
Graph random_bounded_degree_graph(int n, int delta_target, uint64_t seed);

/// Uniformly shuffled ids sliced into blocks of k; deterministic in seed.
/// Requires k to divide vertex_count.
BlockPartition random_equal_partition(int vertex_count, int k, uint64_t seed);

/// Random balanced tripartite instance with min cross-degree at least
/// ceil(3N/2): starts complete and deletes cross edges while both
/// endpoints keep slack. Deterministic in seed.
TripartiteInstance random_dense_tripartite(int part_size, uint64_t seed);

} // namespace strongcolor
