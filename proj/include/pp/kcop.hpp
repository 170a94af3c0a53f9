#pragma once

// k cops. Game states carry a multiset of cop positions, so the augmented
// arena becomes a directed multi-hypergraph: hyperedge ((t,X),(t+1,<y>))
// records that cop placement X at a time congruent to t has a forced capture
// against a robber on y. In-sets have size k, out-sets size 1. The maximal
// augmented k-arena is reached by a plain worklist fixpoint; no incremental
// counters at this scale.

#include <cstdint>
#include <optional>
#include <vector>

#include "pp/arena.hpp"
#include "pp/bits.hpp"
#include "pp/errors.hpp"
#include "pp/multiset.hpp"

namespace pp {

class KHyperedgeSet {
public:
    KHyperedgeSet(int p, MultisetIndex idx);

    int n() const { return idx_.n(); }
    int p() const { return p_; }
    int k() const { return idx_.k(); }
    const MultisetIndex& index() const { return idx_; }

    bool has(int t, std::uint64_t mset_rank, int y) const {
        return heads_.test(row(t, mset_rank), static_cast<std::size_t>(y));
    }
    std::uint64_t hyperedge_count() const { return heads_count(); }

    std::size_t row(int t, std::uint64_t mset_rank) const {
        return static_cast<std::size_t>(static_cast<std::uint64_t>(t) * idx_.count() + mset_rank);
    }
    const BitMatrix& heads() const { return heads_; }
    BitMatrix& heads() { return heads_; }

private:
    std::uint64_t heads_count() const;
    int p_ = 0;
    MultisetIndex idx_;
    BitMatrix heads_;  // row (t, mset), bit y
};

// Worklist fixpoint seeded with the base hyperedges (a single cop adjacent to
// y). A head y is added for (t,X) when some synchronized image Z of X covers
// every escape of (t,y) through Z's recorded heads or Z's own vertices.
// Throws budget_error when p * C(n+k-1,k) * n exceeds the budget.
KHyperedgeSet compute_max_k_augmented(const Arena& d, int k, std::uint64_t budget = kDefaultBudget);

struct KWitness {
    int slice = 0;
    CopMultiset star;    // joint successors plus own vertices cover V
    CopMultiset anchor;  // slice-0 placement
    // journeys[j] leads cop j from anchor.elems[j] to star.elems[j]; all
    // journeys have the same length (the cops move every round).
    std::vector<std::vector<int>> journeys;
};

struct KVerdict {
    bool copwin = false;
    std::optional<KWitness> witness;
    std::uint64_t hyperedges = 0;
    std::uint64_t states = 0;
};

KVerdict decide_k_copwin(const Arena& d, int k, std::uint64_t budget = kDefaultBudget);

// Smallest k <= k_max that wins, or nullopt. A budget failure at some k is
// reported with the largest k that was decided.
std::optional<int> copnumber(const Arena& d, int k_max, std::uint64_t budget = kDefaultBudget);

}  // namespace pp
