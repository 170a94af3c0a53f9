#pragma once

// Brute-force referee. Computes the least fixpoint of winning configurations
// on the folded configuration space: snapshots repeat with period p and the
// players' move sets depend only on the round number mod p, so the winning
// predicate is a function of (t mod p, cop multiset, robber vertex) and the
// infinite configuration graph never has to be materialized.
//
// This module exists to be obviously correct, not fast; the solver is
// cross-validated against it.

#include <cstdint>
#include <limits>
#include <vector>

#include "pp/arena.hpp"
#include "pp/errors.hpp"
#include "pp/multiset.hpp"

namespace pp {

class ConfigTable {
public:
    static constexpr std::uint32_t kInfRank = std::numeric_limits<std::uint32_t>::max();

    ConfigTable(int n, int p, int k, std::uint64_t max_count);

    int n() const { return n_; }
    int p() const { return p_; }
    int k() const { return k_; }
    const MultisetIndex& index() const { return idx_; }
    std::uint64_t mset_count() const { return idx_.count(); }
    std::uint64_t state_count() const { return rank_.size(); }

    // Fixpoint round at which the configuration was marked winning for the
    // cops: 0 for captures (robber on a cop), kInfRank if the robber wins.
    std::uint32_t rank(int t, std::uint64_t mset_rank, int r) const {
        return rank_[flat(t, mset_rank, r)];
    }
    std::uint32_t rank(int t, const CopMultiset& cops, int r) const {
        return rank(t, idx_.rank(cops), r);
    }
    bool copwin(int t, std::uint64_t mset_rank, int r) const {
        return rank(t, mset_rank, r) != kInfRank;
    }
    bool copwin(int t, const CopMultiset& cops, int r) const {
        return rank(t, cops, r) != kInfRank;
    }

private:
    friend ConfigTable copwin_configs(const Arena&, int, std::uint64_t);
    std::size_t flat(int t, std::uint64_t mset_rank, int r) const {
        return static_cast<std::size_t>(
            (static_cast<std::uint64_t>(t) * idx_.count() + mset_rank) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(r));
    }
    int n_ = 0, p_ = 0, k_ = 0;
    MultisetIndex idx_;
    std::vector<std::uint32_t> rank_;
};

// Least fixpoint: captures first, then round after round every configuration
// from which some synchronized cop move either lands on the robber or leaves
// all robber replies already winning. Throws budget_error if the state space
// p * C(n+k-1,k) * n exceeds the budget.
ConfigTable copwin_configs(const Arena& d, int k, std::uint64_t budget = kDefaultBudget);

// True iff some slice-0 cop placement wins against every robber start.
bool oracle_decide(const Arena& d, int k, std::uint64_t budget = kDefaultBudget);

// Robber's best reply after the cops have moved: called with the cops'
// current positions and the robber still on r (not co-located), returns a
// legal move into a non-winning successor if one exists, otherwise the move
// maximizing the successor rank; smallest qualifying vertex on ties.
int adversarial_move(const ConfigTable& tab, const Arena& d, int t, const CopMultiset& cops, int r);

}  // namespace pp
