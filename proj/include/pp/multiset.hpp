#pragma once

// Sorted multisets of cop positions and their dense combinatorial ranking.
// Multisets of size k over n vertices are ordered lexicographically and
// indexed 0 .. C(n+k-1,k)-1, giving flat tables for the k-cop machinery.

#include <cstdint>
#include <functional>
#include <vector>

#include "pp/arena.hpp"
#include "pp/errors.hpp"

namespace pp {

struct CopMultiset {
    std::vector<int> elems;  // sorted ascending, size k

    int wordcount() const { return static_cast<int>(elems.size()); }
    bool contains(int v) const;
    int multiplicity(int v) const;

    friend auto operator<=>(const CopMultiset&, const CopMultiset&) = default;
};

class MultisetIndex {
public:
    // Throws budget_error if C(n+k-1,k) exceeds max_count.
    MultisetIndex(int n, int k, std::uint64_t max_count = kDefaultBudget);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t count() const { return count_; }

    std::uint64_t rank(const CopMultiset& x) const;
    CopMultiset unrank(std::uint64_t r) const;

private:
    int n_ = 0, k_ = 0;
    std::uint64_t count_ = 0;
    // choose_[j][v]: multisets of size j over values v..n-1
    std::vector<std::vector<std::uint64_t>> choose_;
};

// All multisets of size k over 0..n-1 in rank order.
std::vector<CopMultiset> enumerate_multisets(int n, int k, std::uint64_t budget = kDefaultBudget);

// Union of the members' successor sets in slice t.
DynBitset k_out_neighborhood(const Arena& d, int t, const CopMultiset& x);

// Synchronized moves: every image multiset obtained by moving each occurrence
// of X along one slice-t edge. Images are passed in canonical (sorted) form;
// the same image may be visited more than once.
void for_each_image(const Arena& d, int t, const CopMultiset& x,
                    const std::function<void(const CopMultiset&)>& fn);

// Reverse direction: every multiset that can produce Z (living in slice t)
// by a synchronized move along slice t-1 edges.
void for_each_preimage(const Arena& d, int t, const CopMultiset& z,
                       const std::function<void(const CopMultiset&)>& fn);

}  // namespace pp
