#pragma once

// The arena of a periodic graph: a static digraph on (slice, vertex) pairs
// where slice t holds the snapshot-t edges and all edges go from slice t to
// slice (t+1) mod p. Both adjacency directions are stored eagerly, as bit
// rows for subset/membership tests and as sorted lists for degree-bounded
// iteration.

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "pp/bits.hpp"
#include "pp/periodic_graph.hpp"

namespace pp {

struct TemporalNode {
    int t = 0;
    int v = 0;
    friend auto operator<=>(const TemporalNode&, const TemporalNode&) = default;
};

class Arena {
public:
    explicit Arena(const PeriodicGraph& g);

    int vertex_count() const { return n_; }
    int period() const { return p_; }
    std::uint64_t edge_count() const { return m_; }

    // Successors of (t,u); they live in slice (t+1) mod p.
    const std::vector<int>& out_list(int t, int u) const {
        return outl_[static_cast<std::size_t>(t * n_ + u)];
    }
    // Predecessors of (t,v); they live in slice (t-1) mod p.
    const std::vector<int>& in_list(int t, int v) const {
        return inl_[static_cast<std::size_t>(t * n_ + v)];
    }

    bool has_out(int t, int u, int v) const {
        return out_.test(static_cast<std::size_t>(t * n_ + u), static_cast<std::size_t>(v));
    }
    int out_degree(int t, int u) const {
        return static_cast<int>(outl_[static_cast<std::size_t>(t * n_ + u)].size());
    }

    const BitMatrix& out_bits() const { return out_; }
    const BitMatrix& in_bits() const { return in_; }
    std::size_t row(int t, int v) const { return static_cast<std::size_t>(t * n_ + v); }

private:
    int n_ = 0, p_ = 0;
    std::uint64_t m_ = 0;
    BitMatrix out_, in_;  // rows: t*n + v
    std::vector<std::vector<int>> outl_, inl_;
};

inline Arena build_arena(const PeriodicGraph& g) { return Arena(g); }

// Star in the plain arena: the successor set is all of V.
bool is_star(const Arena& a, TemporalNode node);

// Temporal nodes reachable from slice 0 by a journey; slice-0 nodes count as
// reachable via the empty journey. Bit index: t*n + v.
DynBitset anchored_set(const Arena& a);

// All (corner, cover) pairs: distinct vertices u != v with the successors of
// (t,u) contained in the successors of (t+1 mod p, v).
std::vector<std::pair<TemporalNode, TemporalNode>> temporal_corners(const Arena& a);

}  // namespace pp
