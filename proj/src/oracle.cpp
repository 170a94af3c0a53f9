#include "pp/oracle.hpp"

#include <cassert>

namespace pp {

ConfigTable::ConfigTable(int n, int p, int k, std::uint64_t max_count)
    : n_(n), p_(p), k_(k), idx_(n, k, max_count) {
    rank_.assign(static_cast<std::size_t>(p) * idx_.count() * static_cast<std::size_t>(n), kInfRank);
}

ConfigTable copwin_configs(const Arena& d, int k, std::uint64_t budget) {
    assert(k >= 1);
    const int n = d.vertex_count();
    const int p = d.period();

    {
        MultisetIndex probe(n, k, budget);
        std::uint64_t states =
            static_cast<std::uint64_t>(p) * probe.count() * static_cast<std::uint64_t>(n);
        if (states > budget)
            throw budget_error("configuration table needs " + std::to_string(states) +
                               " entries, budget is " + std::to_string(budget));
    }
    ConfigTable tab(n, p, k, budget);
    const MultisetIndex& idx = tab.index();
    std::vector<CopMultiset> msets = enumerate_multisets(n, k, budget);

    // Round 0: the robber stands on a cop.
    for (int t = 0; t < p; ++t)
        for (std::uint64_t c = 0; c < idx.count(); ++c)
            for (int v : msets[static_cast<std::size_t>(c)].elems)
                tab.rank_[tab.flat(t, c, v)] = 0;

    // Round g: some synchronized cop move captures immediately or pushes the
    // robber into configurations settled in earlier rounds.
    for (std::uint32_t g = 1;; ++g) {
        bool changed = false;
        for (int t = 0; t < p; ++t) {
            int tp1 = (t + 1) % p;
            for (std::uint64_t c = 0; c < idx.count(); ++c) {
                const CopMultiset& cops = msets[static_cast<std::size_t>(c)];
                for (int r = 0; r < n; ++r) {
                    if (tab.rank_[tab.flat(t, c, r)] != ConfigTable::kInfRank) continue;
                    bool winning = false;
                    for_each_image(d, t, cops, [&](const CopMultiset& moved) {
                        if (winning) return;
                        if (moved.contains(r)) {
                            winning = true;  // a cop steps onto the robber
                            return;
                        }
                        std::uint64_t c2 = idx.rank(moved);
                        bool all = true;
                        for (int r2 : d.out_list(t, r)) {
                            std::uint32_t rk = tab.rank(tp1, c2, r2);
                            if (rk == ConfigTable::kInfRank || rk >= g) {
                                all = false;
                                break;
                            }
                        }
                        if (all) winning = true;
                    });
                    if (winning) {
                        tab.rank_[tab.flat(t, c, r)] = g;
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return tab;
}

bool oracle_decide(const Arena& d, int k, std::uint64_t budget) {
    ConfigTable tab = copwin_configs(d, k, budget);
    const int n = d.vertex_count();
    for (std::uint64_t c = 0; c < tab.mset_count(); ++c) {
        bool all = true;
        for (int r = 0; r < n; ++r)
            if (!tab.copwin(0, c, r)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

int adversarial_move(const ConfigTable& tab, const Arena& d, int t, const CopMultiset& cops, int r) {
    assert(!cops.contains(r));
    const int tp1 = (t + 1) % d.period();
    const std::uint64_t c = tab.index().rank(cops);
    int best = -1;
    std::uint32_t best_rank = 0;
    for (int r2 : d.out_list(t, r)) {
        std::uint32_t rk = tab.rank(tp1, c, r2);
        if (rk == ConfigTable::kInfRank) return r2;  // escape exists
        if (best == -1 || rk > best_rank) {
            best = r2;
            best_rank = rk;
        }
    }
    assert(best != -1);  // playable graphs always offer a move
    return best;
}

}  // namespace pp
