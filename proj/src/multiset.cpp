#include "pp/multiset.hpp"

#include <algorithm>
#include <cassert>

namespace pp {

bool CopMultiset::contains(int v) const {
    return std::binary_search(elems.begin(), elems.end(), v);
}

int CopMultiset::multiplicity(int v) const {
    auto [lo, hi] = std::equal_range(elems.begin(), elems.end(), v);
    return static_cast<int>(hi - lo);
}

MultisetIndex::MultisetIndex(int n, int k, std::uint64_t max_count) : n_(n), k_(k) {
    assert(n >= 1 && k >= 1);
    // choose_[j][v] = C((n-v) + j - 1, j), built by the Pascal-style
    // recurrence choose_[j][v] = choose_[j][v+1] + choose_[j-1][v].
    choose_.assign(static_cast<std::size_t>(k) + 1,
                   std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int v = 0; v <= n; ++v) choose_[0][static_cast<std::size_t>(v)] = 1;
    for (int j = 1; j <= k; ++j) {
        choose_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = 0;
        for (int v = n - 1; v >= 0; --v) {
            std::uint64_t a = choose_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v) + 1];
            std::uint64_t b = choose_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(v)];
            if (a > max_count || b > max_count || a + b > max_count)
                throw budget_error("multiset count for n=" + std::to_string(n) + " k=" +
                                   std::to_string(k) + " exceeds budget " + std::to_string(max_count));
            choose_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = a + b;
        }
    }
    count_ = choose_[static_cast<std::size_t>(k)][0];
}

std::uint64_t MultisetIndex::rank(const CopMultiset& x) const {
    assert(x.wordcount() == k_);
    std::uint64_t r = 0;
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
        int e = x.elems[static_cast<std::size_t>(i)];
        assert(e >= prev && e < n_);
        // Skip all multisets whose i-th element is in [prev, e).
        for (int v = prev; v < e; ++v)
            r += choose_[static_cast<std::size_t>(k_ - i - 1)][static_cast<std::size_t>(v)];
        prev = e;
    }
    return r;
}

CopMultiset MultisetIndex::unrank(std::uint64_t r) const {
    assert(r < count_);
    CopMultiset x;
    x.elems.reserve(static_cast<std::size_t>(k_));
    int v = 0;
    for (int i = 0; i < k_; ++i) {
        while (true) {
            std::uint64_t block = choose_[static_cast<std::size_t>(k_ - i - 1)][static_cast<std::size_t>(v)];
            if (r < block) break;
            r -= block;
            ++v;
        }
        x.elems.push_back(v);
    }
    return x;
}

std::vector<CopMultiset> enumerate_multisets(int n, int k, std::uint64_t budget) {
    MultisetIndex idx(n, k, budget);
    std::vector<CopMultiset> result;
    result.reserve(static_cast<std::size_t>(idx.count()));
    for (std::uint64_t r = 0; r < idx.count(); ++r) result.push_back(idx.unrank(r));
    return result;
}

DynBitset k_out_neighborhood(const Arena& d, int t, const CopMultiset& x) {
    DynBitset acc(static_cast<std::size_t>(d.vertex_count()));
    for (int v : x.elems) d.out_bits().or_row_into(d.row(t, v), acc);
    return acc;
}

namespace {

// Odometer over per-occurrence candidate lists; canonicalizes each pick.
void for_each_choice(const std::vector<const std::vector<int>*>& options,
                     const std::function<void(const CopMultiset&)>& fn) {
    const std::size_t k = options.size();
    for (const auto* opt : options)
        if (opt->empty()) return;
    std::vector<std::size_t> pick(k, 0);
    CopMultiset image;
    image.elems.resize(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) image.elems[i] = (*options[i])[pick[i]];
        std::sort(image.elems.begin(), image.elems.end());
        fn(image);
        std::size_t i = 0;
        while (i < k && ++pick[i] == options[i]->size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
}

}  // namespace

void for_each_image(const Arena& d, int t, const CopMultiset& x,
                    const std::function<void(const CopMultiset&)>& fn) {
    std::vector<const std::vector<int>*> options;
    options.reserve(x.elems.size());
    for (int v : x.elems) options.push_back(&d.out_list(t, v));
    for_each_choice(options, fn);
}

void for_each_preimage(const Arena& d, int t, const CopMultiset& z,
                       const std::function<void(const CopMultiset&)>& fn) {
    std::vector<const std::vector<int>*> options;
    options.reserve(z.elems.size());
    for (int v : z.elems) options.push_back(&d.in_list(t, v));
    for_each_choice(options, fn);
}

}  // namespace pp
