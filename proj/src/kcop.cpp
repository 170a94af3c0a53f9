#include "pp/kcop.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <tuple>

namespace pp {

KHyperedgeSet::KHyperedgeSet(int p, MultisetIndex idx)
    : p_(p),
      idx_(std::move(idx)),
      heads_(static_cast<std::size_t>(p) * idx_.count(), static_cast<std::size_t>(idx_.n())) {}

std::uint64_t KHyperedgeSet::heads_count() const {
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < heads_.rows(); ++r) total += heads_.row_count(r);
    return total;
}

namespace {

void check_budget(const Arena& d, int k, std::uint64_t budget, std::uint64_t& mset_count) {
    MultisetIndex probe(d.vertex_count(), k, budget);
    std::uint64_t states = static_cast<std::uint64_t>(d.period()) * probe.count() *
                           static_cast<std::uint64_t>(d.vertex_count());
    if (states > budget)
        throw budget_error("k-arena needs " + std::to_string(states) + " entries, budget is " +
                           std::to_string(budget));
    mset_count = probe.count();
}

}  // namespace

KHyperedgeSet compute_max_k_augmented(const Arena& d, int k, std::uint64_t budget) {
    assert(k >= 1);
    const int n = d.vertex_count();
    const int p = d.period();
    std::uint64_t mcount = 0;
    check_budget(d, k, budget, mcount);

    KHyperedgeSet aug(p, MultisetIndex(n, k, budget));
    const MultisetIndex& idx = aug.index();
    std::vector<CopMultiset> msets = enumerate_multisets(n, k, budget);

    // Support sets, shared across slices.
    BitMatrix supp(static_cast<std::size_t>(mcount), static_cast<std::size_t>(n));
    for (std::uint64_t c = 0; c < mcount; ++c)
        for (int v : msets[static_cast<std::size_t>(c)].elems)
            supp.set(static_cast<std::size_t>(c), static_cast<std::size_t>(v));

    // Base hyperedges: some cop of X is adjacent to the head.
    for (int t = 0; t < p; ++t)
        for (std::uint64_t c = 0; c < mcount; ++c) {
            DynBitset u = k_out_neighborhood(d, t, msets[static_cast<std::size_t>(c)]);
            for (int y = 0; y < n; ++y)
                if (u.test(static_cast<std::size_t>(y)))
                    aug.heads().set(aug.row(t, c), static_cast<std::size_t>(y));
        }

    // Worklist of (slice, multiset) whose head set grew; each pop re-examines
    // which robber vertices it now corners.
    BitMatrix corner_done(static_cast<std::size_t>(p) * mcount, static_cast<std::size_t>(n));
    BitMatrix queued(static_cast<std::size_t>(p), static_cast<std::size_t>(mcount));
    std::deque<std::pair<int, std::uint64_t>> work;
    for (int t = 0; t < p; ++t)
        for (std::uint64_t c = 0; c < mcount; ++c) {
            work.push_back({t, c});
            queued.set(static_cast<std::size_t>(t), static_cast<std::size_t>(c));
        }

    while (!work.empty()) {
        auto [s, c] = work.front();
        work.pop_front();
        queued.reset(static_cast<std::size_t>(s), static_cast<std::size_t>(c));
        const CopMultiset& cover = msets[static_cast<std::size_t>(c)];
        int sm1 = (s + p - 1) % p;
        for (int y = 0; y < n; ++y) {
            if (corner_done.test(aug.row(s, c), static_cast<std::size_t>(y))) continue;
            // (s-1, y) is cornered by `cover` when every escape of y is a
            // recorded head of cover or one of cover's own vertices.
            if (!row_subset2(d.out_bits(), d.row(sm1, y), aug.heads(), aug.row(s, c), supp,
                             static_cast<std::size_t>(c)))
                continue;
            corner_done.set(aug.row(s, c), static_cast<std::size_t>(y));
            for_each_preimage(d, s, cover, [&](const CopMultiset& from) {
                if (from.contains(y)) return;  // co-location is implicit
                std::uint64_t fc = idx.rank(from);
                if (aug.has(sm1, fc, y)) return;
                aug.heads().set(aug.row(sm1, fc), static_cast<std::size_t>(y));
                if (!queued.test(static_cast<std::size_t>(sm1), static_cast<std::size_t>(fc))) {
                    queued.set(static_cast<std::size_t>(sm1), static_cast<std::size_t>(fc));
                    work.push_back({sm1, fc});
                }
            });
        }
    }
    return aug;
}

namespace {

// Reachability on (slice, multiset) states under synchronized moves, with
// enough bookkeeping to reconstruct per-cop journeys.
struct ProductReach {
    std::vector<int> parent;               // flat state id, -1 unreached
    std::vector<std::vector<int>> moves;   // targets per occurrence of the parent
    std::vector<int> dist;

    static std::size_t id(int t, std::uint64_t c, std::uint64_t mcount) {
        return static_cast<std::size_t>(static_cast<std::uint64_t>(t) * mcount + c);
    }
};

ProductReach reach_from_slice0(const Arena& d, const MultisetIndex& idx,
                               const std::vector<CopMultiset>& msets) {
    const int p = d.period();
    const std::uint64_t mcount = idx.count();
    ProductReach rs;
    rs.parent.assign(static_cast<std::size_t>(p) * mcount, -1);
    rs.moves.resize(static_cast<std::size_t>(p) * mcount);
    rs.dist.assign(static_cast<std::size_t>(p) * mcount, -1);

    std::deque<std::size_t> queue;
    for (std::uint64_t c = 0; c < mcount; ++c) {
        std::size_t s0 = ProductReach::id(0, c, mcount);
        rs.parent[s0] = static_cast<int>(s0);  // roots are their own parent
        rs.dist[s0] = 0;
        queue.push_back(s0);
    }
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        int t = static_cast<int>(cur / mcount);
        std::uint64_t c = cur % mcount;
        int tp1 = (t + 1) % p;
        const CopMultiset& x = msets[static_cast<std::size_t>(c)];

        // Enumerate assignments explicitly to remember who moved where.
        std::vector<const std::vector<int>*> options;
        for (int v : x.elems) options.push_back(&d.out_list(t, v));
        std::vector<std::size_t> pick(options.size(), 0);
        std::vector<int> assignment(options.size(), 0);
        while (true) {
            CopMultiset image;
            image.elems.resize(options.size());
            for (std::size_t i = 0; i < options.size(); ++i) {
                assignment[i] = (*options[i])[pick[i]];
                image.elems[i] = assignment[i];
            }
            std::sort(image.elems.begin(), image.elems.end());
            std::size_t nxt = ProductReach::id(tp1, idx.rank(image), mcount);
            if (rs.parent[nxt] == -1) {
                rs.parent[nxt] = static_cast<int>(cur);
                rs.moves[nxt] = assignment;
                rs.dist[nxt] = rs.dist[cur] + 1;
                queue.push_back(nxt);
            }
            std::size_t i = 0;
            while (i < options.size() && ++pick[i] == options[i]->size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == options.size()) break;
        }
    }
    return rs;
}

KWitness build_k_witness(const MultisetIndex& idx, const std::vector<CopMultiset>& msets,
                         const ProductReach& rs, int t, std::uint64_t c) {
    const std::uint64_t mcount = idx.count();
    KWitness w;
    w.slice = t;
    w.star = msets[static_cast<std::size_t>(c)];

    // Walk back to slice 0 collecting the per-occurrence move vectors.
    std::vector<std::vector<int>> steps;  // in reverse order
    std::size_t cur = ProductReach::id(t, c, mcount);
    while (rs.dist[cur] > 0) {
        steps.push_back(rs.moves[cur]);
        cur = static_cast<std::size_t>(rs.parent[cur]);
    }
    w.anchor = msets[static_cast<std::size_t>(cur % mcount)];
    std::reverse(steps.begin(), steps.end());

    const int k = w.anchor.wordcount();
    std::vector<int> pos = w.anchor.elems;
    std::vector<std::size_t> order(static_cast<std::size_t>(k));
    w.journeys.assign(static_cast<std::size_t>(k), {});
    for (int j = 0; j < k; ++j) w.journeys[static_cast<std::size_t>(j)].push_back(pos[static_cast<std::size_t>(j)]);
    for (const auto& mv : steps) {
        // The move vector is indexed by sorted occurrence; match cops to
        // occurrences by their current position, stably.
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
        for (std::size_t i = 0; i < order.size(); ++i) {
            pos[order[i]] = mv[i];
            w.journeys[order[i]].push_back(mv[i]);
        }
    }
    return w;
}

}  // namespace

KVerdict decide_k_copwin(const Arena& d, int k, std::uint64_t budget) {
    const int n = d.vertex_count();
    const int p = d.period();

    KHyperedgeSet aug = compute_max_k_augmented(d, k, budget);
    const MultisetIndex& idx = aug.index();
    std::vector<CopMultiset> msets = enumerate_multisets(n, k, budget);

    KVerdict v;
    v.hyperedges = aug.hyperedge_count();
    v.states = static_cast<std::uint64_t>(p) * idx.count() * static_cast<std::uint64_t>(n);

    ProductReach rs = reach_from_slice0(d, idx, msets);

    for (int t = 0; t < p && !v.copwin; ++t)
        for (std::uint64_t c = 0; c < idx.count(); ++c) {
            if (rs.dist[ProductReach::id(t, c, idx.count())] == -1) continue;  // not anchored
            // k-star test: heads plus the cops' own vertices cover V.
            DynBitset cov(static_cast<std::size_t>(n));
            aug.heads().or_row_into(aug.row(t, c), cov);
            for (int x : msets[static_cast<std::size_t>(c)].elems) cov.set(static_cast<std::size_t>(x));
            if (cov.all()) {
                v.copwin = true;
                v.witness = build_k_witness(idx, msets, rs, t, c);
                break;
            }
        }
    return v;
}

std::optional<int> copnumber(const Arena& d, int k_max, std::uint64_t budget) {
    assert(k_max >= 1);
    int decided = 0;
    for (int k = 1; k <= k_max; ++k) {
        try {
            if (decide_k_copwin(d, k, budget).copwin) return k;
        } catch (const budget_error& e) {
            throw budget_error(std::string(e.what()) + " (largest decided k = " +
                               std::to_string(decided) + ", none copwin)");
        }
        decided = k;
    }
    return std::nullopt;
}

}  // namespace pp
