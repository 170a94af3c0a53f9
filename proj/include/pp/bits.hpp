#pragma once

// Flat bit vectors and row-major bit matrices. Neighborhood sets, adjacency
// matrices and solver tables are all stored as fixed-width rows of n bits so
// that membership, subset and popcount queries are word-parallel.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pp {

class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const {
        assert(i < bits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < bits_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < bits_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool all() const { return count() == bits_; }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;

    const std::uint64_t* words() const { return w_.data(); }
    std::size_t word_count() const { return w_.size(); }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Fixed number of rows, each `bits` wide. Rows are addressed by index; the
// caller owns the row-index layout (e.g. slice*n + vertex).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t bits)
        : rows_(rows), bits_(bits), wpr_((bits + 63) / 64), w_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t bits() const { return bits_; }
    std::size_t words_per_row() const { return wpr_; }

    bool test(std::size_t r, std::size_t i) const {
        assert(r < rows_ && i < bits_);
        return (w_[r * wpr_ + (i >> 6)] >> (i & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t i) {
        assert(r < rows_ && i < bits_);
        w_[r * wpr_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
    }
    void reset(std::size_t r, std::size_t i) {
        assert(r < rows_ && i < bits_);
        w_[r * wpr_ + (i >> 6)] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t row_count(std::size_t r) const {
        const std::uint64_t* p = row_ptr(r);
        std::size_t c = 0;
        for (std::size_t i = 0; i < wpr_; ++i) c += static_cast<std::size_t>(std::popcount(p[i]));
        return c;
    }

    const std::uint64_t* row_ptr(std::size_t r) const {
        assert(r < rows_);
        return w_.data() + r * wpr_;
    }

    void or_row_into(std::size_t r, DynBitset& dst) const {
        assert(dst.size() == bits_);
        const std::uint64_t* p = row_ptr(r);
        auto* d = const_cast<std::uint64_t*>(dst.words());
        for (std::size_t i = 0; i < wpr_; ++i) d[i] |= p[i];
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, bits_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

inline bool rows_equal(const BitMatrix& a, std::size_t ra, const BitMatrix& b, std::size_t rb) {
    assert(a.bits() == b.bits());
    const std::uint64_t* pa = a.row_ptr(ra);
    const std::uint64_t* pb = b.row_ptr(rb);
    for (std::size_t i = 0; i < a.words_per_row(); ++i)
        if (pa[i] != pb[i]) return false;
    return true;
}

// a[ra] subset of b[rb], optionally with one extra bit granted on the right.
inline bool row_subset(const BitMatrix& a, std::size_t ra, const BitMatrix& b, std::size_t rb,
                       int extra_bit = -1) {
    assert(a.bits() == b.bits());
    const std::uint64_t* pa = a.row_ptr(ra);
    const std::uint64_t* pb = b.row_ptr(rb);
    for (std::size_t i = 0; i < a.words_per_row(); ++i) {
        std::uint64_t rhs = pb[i];
        if (extra_bit >= 0 && static_cast<std::size_t>(extra_bit >> 6) == i)
            rhs |= std::uint64_t(1) << (extra_bit & 63);
        if (pa[i] & ~rhs) return false;
    }
    return true;
}

// a[ra] subset of b[rb] | c[rc].
inline bool row_subset2(const BitMatrix& a, std::size_t ra, const BitMatrix& b, std::size_t rb,
                        const BitMatrix& c, std::size_t rc) {
    assert(a.bits() == b.bits() && b.bits() == c.bits());
    const std::uint64_t* pa = a.row_ptr(ra);
    const std::uint64_t* pb = b.row_ptr(rb);
    const std::uint64_t* pc = c.row_ptr(rc);
    for (std::size_t i = 0; i < a.words_per_row(); ++i)
        if (pa[i] & ~(pb[i] | pc[i])) return false;
    return true;
}

}  // namespace pp
