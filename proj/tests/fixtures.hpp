#pragma once

// Canonical small instances used across the test suites.

#include <vector>

#include "pp/arena.hpp"
#include "pp/periodic_graph.hpp"

namespace fixtures {

using pp::Edge;
using pp::PeriodicGraph;

// Two vertices that must swap places every round.
inline PeriodicGraph swap2() {
    return PeriodicGraph(2, 1, {{{0, 1}, {1, 0}}});
}

// Reflexive undirected path 0-1-2.
inline PeriodicGraph rp3() {
    return PeriodicGraph(3, 1, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}});
}

// Reflexive complete graph on two vertices.
inline PeriodicGraph rk2() {
    return PeriodicGraph(2, 1, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
}

// Reflexive undirected cycle on n vertices (period 1).
inline PeriodicGraph reflexive_cycle(int n) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) {
        es.push_back({v, v});
        es.push_back({v, (v + 1) % n});
        es.push_back({(v + 1) % n, v});
    }
    return PeriodicGraph(n, 1, {es});
}

inline PeriodicGraph rc4() { return reflexive_cycle(4); }

// Reflexive undirected path 0-1-...-(n-1).
inline PeriodicGraph reflexive_path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back({v, v});
    for (int v = 0; v + 1 < n; ++v) {
        es.push_back({v, v + 1});
        es.push_back({v + 1, v});
    }
    return PeriodicGraph(n, 1, {es});
}

// Directed n-cycle, no self-loops.
inline PeriodicGraph dicyc(int n) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
    return PeriodicGraph(n, 1, {es});
}

inline PeriodicGraph dicyc3() { return dicyc(3); }

// Period 2: swap in the even rounds, wait in the odd ones.
inline PeriodicGraph per2() {
    return PeriodicGraph(2, 2, {{{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}});
}

// Period 2 with every snapshot disconnected but temporally connected.
inline PeriodicGraph per_disc() {
    return PeriodicGraph(3, 2, {{{0, 1}, {1, 0}, {2, 2}}, {{0, 0}, {1, 2}, {2, 1}}});
}

// Single vertex with the forced self-loop.
inline PeriodicGraph single() {
    return PeriodicGraph(1, 1, {{{0, 0}}});
}

}  // namespace fixtures
