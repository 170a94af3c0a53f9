#include "pp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace pp {

AugmentedArena::AugmentedArena(const Arena& base)
    : base_(base), committed_(base.out_bits()), shadow_(base.out_bits()), edges_(base.edge_count()) {}

bool is_star(const AugmentedArena& a, TemporalNode node) {
    const Arena& d = a.base();
    std::size_t covered = a.committed_bits().row_count(d.row(node.t, node.v));
    if (!a.committed(node.t, node.v, node.v)) ++covered;  // own vertex is free
    return covered == static_cast<std::size_t>(d.vertex_count());
}

SolverState::SolverState(const Arena& d)
    : n_(static_cast<std::size_t>(d.vertex_count())),
      p_(static_cast<std::size_t>(d.period())),
      aug_(d),
      sc_(p_ * n_, n_),
      dif_(p_ * n_ * n_, n_),
      dif_size_(p_ * n_ * n_, 0),
      star_cover_(p_ * n_, 0),
      rho_(p_ * n_ * n_, -1) {
    const int n = d.vertex_count();
    const int p = d.period();
    ops_.table_init = static_cast<std::uint64_t>(p_) * n_ * n_;

    for (int t = 0; t < p; ++t)
        for (int x = 0; x < n; ++x) {
            star_cover_[node_row(t, x)] = static_cast<int>(d.out_bits().row_count(d.row(t, x)));
            if (!d.has_out(t, x, x)) ++star_cover_[node_row(t, x)];
            for (int y : d.out_list(t, x)) rho_[cfg(t, x, y)] = y;  // base edges: step onto the robber
        }

    for (int t = 0; t < p; ++t) {
        int tp1 = (t + 1) % p;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                std::size_t idx = cfg(t, u, v);
                std::uint32_t uncovered = 0;
                for (int w : d.out_list(t, u)) {
                    ++ops_.dif_init_cells;
                    bool covered = (w == v) || d.has_out(tp1, v, w);
                    if (!covered) {
                        dif_.set(idx, static_cast<std::size_t>(w));
                        ++uncovered;
                    }
                }
                dif_size_[idx] = uncovered;
                if (uncovered == 0) fire_corner(t, u, v);
            }
    }
}

void SolverState::fire_corner(int corner_t, int corner_v, int cover_v) {
    if (sc_.test(node_row(corner_t, corner_v), static_cast<std::size_t>(cover_v))) return;
    sc_.set(node_row(corner_t, corner_v), static_cast<std::size_t>(cover_v));
    const Arena& d = aug_.base();
    int tp1 = (corner_t + 1) % static_cast<int>(p_);
    // Any cop position that can move onto the cover wins against the corner.
    for (int w : d.in_list(tp1, cover_v)) {
        ++ops_.corner_scans;
        if (w == corner_v) continue;  // diagonal edges stay implicit
        std::size_t r = node_row(corner_t, w);
        if (!aug_.shadow_.test(r, static_cast<std::size_t>(corner_v))) {
            aug_.shadow_.set(r, static_cast<std::size_t>(corner_v));
            rho_[cfg(corner_t, w, corner_v)] = cover_v;
            queue_.push_back({corner_t, w, corner_v});
            ++ops_.queue_pushes;
        }
    }
}

QueuedEdge SolverState::step_commit() {
    assert(!queue_.empty());
    QueuedEdge e = queue_.front();
    queue_.pop_front();
    ++iterations_;

    const Arena& d = aug_.base();
    std::size_t r = node_row(e.t, e.x);
    assert(!aug_.committed_.test(r, static_cast<std::size_t>(e.y)));
    aug_.committed_.set(r, static_cast<std::size_t>(e.y));
    ++aug_.edges_;
    ++star_cover_[r];

    // The new edge covers escape y for every configuration whose robber can
    // reach y and whose cover candidate is x.
    int tm1 = (e.t + static_cast<int>(p_) - 1) % static_cast<int>(p_);
    for (int z : d.in_list(e.t, e.y)) {
        ++ops_.dif_updates;
        std::size_t idx = cfg(tm1, z, e.x);
        if (dif_.test(idx, static_cast<std::size_t>(e.y))) {
            dif_.reset(idx, static_cast<std::size_t>(e.y));
            --dif_size_[idx];
        }
        if (dif_size_[idx] == 0 && !sc_.test(node_row(tm1, z), static_cast<std::size_t>(e.x)))
            fire_corner(tm1, z, e.x);
    }
    return e;
}

bool SolverState::step() {
    if (queue_.empty()) return false;
    step_commit();
    return true;
}

void SolverState::run_to_exhaustion() {
    while (!queue_.empty()) step_commit();
}

namespace {

// Shortest journey from slice 0 to the star, preferring the closest anchor
// and the smallest vertex at every tie.
Witness build_witness(const Arena& d, TemporalNode star, OpCounters& ops) {
    const int n = d.vertex_count();
    const int p = d.period();
    const int inf = -1;

    // Reverse reachability: dist[node] = rounds needed to reach the star.
    std::vector<int> dist(static_cast<std::size_t>(p * n), inf);
    std::deque<int> queue;
    int star_id = star.t * n + star.v;
    dist[static_cast<std::size_t>(star_id)] = 0;
    queue.push_back(star_id);
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        ++ops.witness_ops;
        int t = node / n, v = node % n;
        for (int z : d.in_list(t, v)) {
            int prev = ((t + p - 1) % p) * n + z;
            if (dist[static_cast<std::size_t>(prev)] == inf) {
                dist[static_cast<std::size_t>(prev)] = dist[static_cast<std::size_t>(node)] + 1;
                queue.push_back(prev);
            }
        }
    }

    Witness w;
    w.star = star;
    int best = inf;
    for (int v = 0; v < n; ++v) {
        int dv = dist[static_cast<std::size_t>(v)];
        if (dv != inf && (best == inf || dv < best)) {
            best = dv;
            w.anchor = v;
        }
    }
    assert(best != inf);  // anchored by the caller's check

    w.journey.push_back(w.anchor);
    int t = 0, v = w.anchor, remaining = best;
    while (remaining > 0) {
        int tp1 = (t + 1) % p;
        for (int x : d.out_list(t, v)) {
            ++ops.witness_ops;
            if (dist[static_cast<std::size_t>(tp1 * n + x)] == remaining - 1) {
                v = x;
                t = tp1;
                --remaining;
                w.journey.push_back(v);
                break;
            }
        }
    }
    return w;
}

}  // namespace

Verdict decide_copwin(SolverState& st, DecideOptions opts) {
    const Arena& d = st.base();
    const int n = d.vertex_count();
    const int p = d.period();
    OpCounters& ops = st.ops_;

    auto finish = [&](std::optional<TemporalNode> star) {
        Verdict v;
        v.copwin = star.has_value();
        if (star) v.witness = build_witness(d, *star, ops);
        v.stats.iterations = st.iterations();
        v.stats.aug_edges = st.aug().committed_edge_count();
        v.stats.ops = st.ops();
        return v;
    };

    if (opts.reflexive_tc_shortcut) {
        // Reflexive + temporally connected: if any star exists, every node of
        // the maximal augmented arena is an anchored star, so probing a single
        // node decides the game.
        st.run_to_exhaustion();
        ops.final_star_ops += 1;
        if (st.star_cover(0, 0) == n) return finish(TemporalNode{0, 0});
        return finish(std::nullopt);
    }

    DynBitset anchored = anchored_set(d);
    ops.final_star_ops += static_cast<std::uint64_t>(p) * n + d.edge_count();

    auto scan_for_star = [&]() -> std::optional<TemporalNode> {
        for (int t = 0; t < p; ++t)
            for (int v = 0; v < n; ++v) {
                ++ops.final_star_ops;
                if (st.star_cover(t, v) == n && anchored.test(static_cast<std::size_t>(t * n + v)))
                    return TemporalNode{t, v};
            }
        return std::nullopt;
    };

    if (opts.early_stop) {
        if (auto star = scan_for_star()) return finish(star);
        while (!st.queue_empty()) {
            QueuedEdge e = st.step_commit();
            ++ops.final_star_ops;
            if (st.star_cover(e.t, e.x) == n &&
                anchored.test(static_cast<std::size_t>(e.t * n + e.x)))
                return finish(TemporalNode{e.t, e.x});
        }
        return finish(std::nullopt);
    }

    st.run_to_exhaustion();
    return finish(scan_for_star());
}

Verdict decide_copwin(const Arena& d, DecideOptions opts) {
    SolverState st(d);
    return decide_copwin(st, opts);
}

AugmentedArena compute_max_augmented(const Arena& d) {
    SolverState st(d);
    st.run_to_exhaustion();
    return st.aug();
}

std::string Strategy::serialize() const {
    std::ostringstream out;
    out << "strategy 1\n";
    out << "start " << start << "\n";
    out << "journey";
    for (int v : journey) out << " " << v;
    out << "\n";
    for (const auto& [key, z] : rho) {
        const auto& [t, x, y] = key;
        out << "rho " << t << " " << x << " " << y << " " << z << "\n";
    }
    return out.str();
}

Strategy extract_strategy(const SolverState& st, const Verdict& verdict) {
    assert(verdict.copwin && verdict.witness.has_value());
    const Arena& d = st.base();
    const int n = d.vertex_count();
    const int p = d.period();
    const Witness& w = *verdict.witness;

    Strategy s;
    s.start = w.anchor;
    s.journey = w.journey;

    // Pursuit closure from the star: every robber position must have a
    // recorded move, and each move must lead to configurations that are
    // themselves recorded (or captures).
    DynBitset seen(static_cast<std::size_t>(p) * n * n);
    std::deque<std::tuple<int, int, int>> work;
    auto push = [&](int t, int x, int y) {
        std::size_t id = (static_cast<std::size_t>(t) * n + x) * n + y;
        if (!seen.test(id)) {
            seen.set(id);
            work.push_back({t, x, y});
        }
    };
    for (int y = 0; y < n; ++y)
        if (y != w.star.v) push(w.star.t, w.star.v, y);

    while (!work.empty()) {
        auto [t, x, y] = work.front();
        work.pop_front();
        int z = st.rho(t, x, y);
        assert(z >= 0 && "pursuit reached a configuration with no recorded move");
        s.rho[{t, x, y}] = z;
        if (z == y) continue;  // the cop steps onto the robber
        int tp1 = (t + 1) % p;
        for (int r : d.out_list(t, y))
            if (r != z) push(tp1, z, r);
    }
    return s;
}

}  // namespace pp
