#pragma once

// Periodic temporal graphs: a fixed vertex set 0..n-1 and p snapshot edge
// sets that repeat forever. Every snapshot must be sinkless ("playable"):
// the game is restless, so every vertex needs an outgoing edge each round.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pp/errors.hpp"

namespace pp {

using Edge = std::pair<int, int>;

struct StaticGraph {
    StaticGraph(int n, std::vector<Edge> edges);

    int n = 0;
    std::vector<Edge> edges;  // sorted, unique
};

struct GraphClass {
    bool reflexive = false;
    bool symmetric = false;
    bool sourceless = false;
    bool temporally_connected = false;

    friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

class PeriodicGraph {
public:
    // Validates endpoints, rejects duplicate edges within a snapshot, and
    // rejects graphs with a sinking vertex in any snapshot.
    PeriodicGraph(int n, int p, std::vector<std::vector<Edge>> snapshots);

    int vertex_count() const { return n_; }
    int period() const { return p_; }
    const std::vector<Edge>& snapshot(int i) const { return snaps_[static_cast<std::size_t>(i)]; }
    bool has_edge(int i, int u, int v) const;
    std::size_t edge_count() const;

    // Canonical text form: sorted `e` lines only.
    std::string serialize() const;

    friend bool operator==(const PeriodicGraph&, const PeriodicGraph&) = default;

private:
    int n_ = 0, p_ = 0;
    std::vector<std::vector<Edge>> snaps_;  // each sorted, unique
};

// Text format, line-oriented:
//   ptg 1
//   n <vertices>
//   p <period>
//   s 0
//   e <u> <v>        directed edge
//   u <a> <b>        both directions, a != b
//   reflexive        all self-loops in the current snapshot
//   ...
// `#` starts a comment; blank lines are ignored. Snapshot headers must
// appear in order 0..p-1. Duplicate edges are an error.
PeriodicGraph parse_ptg(std::string_view text);

StaticGraph footprint(const PeriodicGraph& g);

GraphClass classify(const PeriodicGraph& g);

// Classical board encodings: each undirected edge {u,v} of `g` becomes both
// arcs in every one of `copies` identical snapshots; `allow_wait` adds all
// self-loops (players may stay put).
PeriodicGraph encode_standard(const StaticGraph& g, bool allow_wait, int copies);

struct GenFlags {
    bool reflexive = false;
    bool symmetric = false;
};

// Deterministic random instance: per snapshot each vertex gets one random
// out-edge (playability) plus `extra_out_degree` additional distinct ones,
// then the symmetric/reflexive closures. Same arguments, same graph.
PeriodicGraph gen_random(int n, int p, int extra_out_degree, std::uint64_t seed,
                         GenFlags flags = {});

}  // namespace pp
