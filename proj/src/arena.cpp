#include "pp/arena.hpp"

#include <deque>

namespace pp {

Arena::Arena(const PeriodicGraph& g)
    : n_(g.vertex_count()),
      p_(g.period()),
      m_(g.edge_count()),
      out_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)),
      in_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)),
      outl_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(n_)),
      inl_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(n_)) {
    for (int t = 0; t < p_; ++t) {
        int tp1 = (t + 1) % p_;
        // Snapshot edges are sorted by (u,v), so all lists come out sorted.
        for (const Edge& e : g.snapshot(t)) {
            out_.set(row(t, e.first), static_cast<std::size_t>(e.second));
            outl_[row(t, e.first)].push_back(e.second);
            in_.set(row(tp1, e.second), static_cast<std::size_t>(e.first));
            inl_[row(tp1, e.second)].push_back(e.first);
        }
    }
}

bool is_star(const Arena& a, TemporalNode node) {
    return a.out_bits().row_count(a.row(node.t, node.v)) ==
           static_cast<std::size_t>(a.vertex_count());
}

DynBitset anchored_set(const Arena& a) {
    const int n = a.vertex_count();
    const int p = a.period();
    DynBitset visited(static_cast<std::size_t>(p) * static_cast<std::size_t>(n));
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        visited.set(static_cast<std::size_t>(v));
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        int t = node / n, u = node % n;
        int tp1 = (t + 1) % p;
        for (int w : a.out_list(t, u)) {
            int nxt = tp1 * n + w;
            if (!visited.test(static_cast<std::size_t>(nxt))) {
                visited.set(static_cast<std::size_t>(nxt));
                queue.push_back(nxt);
            }
        }
    }
    return visited;
}

std::vector<std::pair<TemporalNode, TemporalNode>> temporal_corners(const Arena& a) {
    const int n = a.vertex_count();
    const int p = a.period();
    std::vector<std::pair<TemporalNode, TemporalNode>> result;
    for (int t = 0; t < p; ++t) {
        int tp1 = (t + 1) % p;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if (row_subset(a.out_bits(), a.row(t, u), a.out_bits(), a.row(tp1, v)))
                    result.push_back({TemporalNode{t, u}, TemporalNode{tp1, v}});
            }
    }
    return result;
}

}  // namespace pp
