#pragma once

// Copwin decision for a single cop. The solver grows an augmented arena: on
// top of the base arena it records "shadow" edges ((t,x),(t+1,y)) meaning the
// cop, standing on x at a time congruent to t with the robber on y, has a
// forced capture. The maximal augmented arena is reached by a worklist
// fixpoint over shadow corners: whenever every escape of (t,y) is covered by
// the shadow successors of some (t+1,z) reachable from (t,x), the edge
// ((t,x),(t+1,y)) is itself a shadow edge.
//
// Diagonal convention: a configuration with cop and robber co-located is a
// capture, so every cell w == v of a DIF core counts as covered, the star
// test grants each node its own vertex, and diagonal shadow edges are never
// stored or queued — they are implicit.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pp/arena.hpp"
#include "pp/bits.hpp"

namespace pp {

struct OpCounters {
    std::uint64_t table_init = 0;      // fixed per-cell table setup, p*n^2
    std::uint64_t dif_init_cells = 0;  // DIF core cells written during initialization
    std::uint64_t dif_updates = 0;     // per-in-neighbour DIF probes during iteration
    std::uint64_t corner_scans = 0;    // per-candidate edge tests when a corner fires
    std::uint64_t queue_pushes = 0;
    std::uint64_t final_star_ops = 0;  // terminal anchored-star determination
    std::uint64_t witness_ops = 0;     // witness journey construction

    std::uint64_t total() const {
        return table_init + dif_init_cells + dif_updates + corner_scans + queue_pushes +
               final_star_ops + witness_ops;
    }
};

// Base arena plus recorded shadow edges. `committed` holds edges already
// merged into the arena; `shadow` additionally holds edges still queued.
class AugmentedArena {
public:
    explicit AugmentedArena(const Arena& base);

    const Arena& base() const { return base_; }
    int vertex_count() const { return base_.vertex_count(); }
    int period() const { return base_.period(); }

    bool committed(int t, int x, int y) const {
        return committed_.test(base_.row(t, x), static_cast<std::size_t>(y));
    }
    bool shadow(int t, int x, int y) const {
        return shadow_.test(base_.row(t, x), static_cast<std::size_t>(y));
    }
    std::uint64_t committed_edge_count() const { return edges_; }

    const BitMatrix& committed_bits() const { return committed_; }
    const BitMatrix& shadow_bits() const { return shadow_; }

private:
    friend class SolverState;
    Arena base_;
    BitMatrix committed_, shadow_;  // rows: t*n + x, bit y
    std::uint64_t edges_ = 0;
};

// Star in an augmented arena: committed successors plus the node's own
// vertex cover all of V.
bool is_star(const AugmentedArena& a, TemporalNode node);

struct QueuedEdge {
    int t = 0, x = 0, y = 0;
    friend auto operator<=>(const QueuedEdge&, const QueuedEdge&) = default;
};

struct DecideOptions;
struct Verdict;
class SolverState;
Verdict decide_copwin(SolverState& st, DecideOptions opts);

class SolverState {
public:
    // Initialization phase: DIF cores, base-arena corners, initial queue.
    explicit SolverState(const Arena& d);

    // One iteration: pop a shadow edge, commit it, update DIF tables, detect
    // new shadow corners and queue the edges they imply. False if the queue
    // is empty (the augmented arena is then maximal).
    bool step();
    void run_to_exhaustion();

    const AugmentedArena& aug() const { return aug_; }
    const Arena& base() const { return aug_.base(); }
    const OpCounters& ops() const { return ops_; }
    std::uint64_t iterations() const { return iterations_; }
    bool queue_empty() const { return queue_.empty(); }
    std::size_t queue_size() const { return queue_.size(); }

    // Cop's recorded pursuit move for shadow edge ((t,x),(t+1,y)); -1 if the
    // edge is unknown.
    int rho(int t, int x, int y) const { return rho_[cfg(t, x, y)]; }

    // Introspection used by tests.
    std::uint32_t dif_size(int t, int u, int v) const { return dif_size_[cfg(t, u, v)]; }
    bool dif_bit(int t, int u, int v, int w) const {
        return dif_.test(cfg(t, u, v), static_cast<std::size_t>(w));
    }
    bool shadow_corner(int t, int u, int v) const {
        return sc_.test(node_row(t, u), static_cast<std::size_t>(v));
    }
    int star_cover(int t, int x) const { return star_cover_[node_row(t, x)]; }

private:
    friend Verdict decide_copwin(SolverState& st, DecideOptions opts);

    std::size_t node_row(int t, int v) const { return static_cast<std::size_t>(t) * n_ + v; }
    std::size_t cfg(int t, int x, int y) const {
        return (static_cast<std::size_t>(t) * n_ + x) * n_ + y;
    }

    // Record (corner_t, corner_v) as a shadow corner of (corner_t+1, cover_v)
    // and queue the implied edges.
    void fire_corner(int corner_t, int corner_v, int cover_v);
    QueuedEdge step_commit();  // precondition: queue non-empty

    std::size_t n_ = 0, p_ = 0;
    AugmentedArena aug_;
    BitMatrix sc_;                        // rows t*n+u, bit v: corner recorded
    BitMatrix dif_;                       // rows (t*n+u)*n+v, bit w: uncovered escape
    std::vector<std::uint32_t> dif_size_; // ones remaining in each DIF core
    std::vector<int> star_cover_;         // |committed successors of (t,x) + own vertex|
    std::vector<int> rho_;
    std::deque<QueuedEdge> queue_;
    OpCounters ops_;
    std::uint64_t iterations_ = 0;
};

struct Witness {
    TemporalNode star;
    int anchor = 0;            // slice-0 vertex the cop starts from
    std::vector<int> journey;  // anchor .. star vertex, one edge per round
};

struct SolveStats {
    std::uint64_t iterations = 0;
    std::uint64_t aug_edges = 0;  // committed edges when the run stopped
    OpCounters ops;
};

struct Verdict {
    bool copwin = false;
    std::optional<Witness> witness;
    SolveStats stats;
};

struct DecideOptions {
    bool early_stop = true;
    // Caller guarantees the graph is reflexive and temporally connected; the
    // terminal check then reduces to one star test on node (0,0).
    bool reflexive_tc_shortcut = false;
};

// Runs on a fresh state and leaves it stopped (early or at the fixpoint), so
// a strategy can be extracted from the same state afterwards.
Verdict decide_copwin(SolverState& st, DecideOptions opts = {});
Verdict decide_copwin(const Arena& d, DecideOptions opts = {});

AugmentedArena compute_max_augmented(const Arena& d);

// Executable cop strategy: walk `journey` to the star, then follow `rho`.
struct Strategy {
    int start = 0;
    std::vector<int> journey;
    std::map<std::tuple<int, int, int>, int> rho;

    std::string serialize() const;
};

// Precondition: verdict.copwin and verdict produced from `st`. The rho table
// is restricted to configurations reachable during pursuit from the star.
Strategy extract_strategy(const SolverState& st, const Verdict& verdict);

}  // namespace pp
