#pragma once

#include <cstdint>
#include <vector>

namespace tbwt {

/// Plain mutable bitvector backed by 64-bit words.
///
/// Used for the node-boundary vector B, the fusion-mark vector F and the
/// tunneling vectors before they are frozen. No rank/select; wrap the final
/// bits in a RankSelectBitVector for queries.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t n_bits, bool fill = false);

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(size_t i) {
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void clear(size_t i) {
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void assign(size_t i, bool v) {
        v ? set(i) : clear(i);
    }

    size_t size() const { return n_; }
    uint64_t count_ones() const;

    const std::vector<uint64_t>& words() const { return words_; }

    bool operator==(const BitVector&) const = default;

  private:
    std::vector<uint64_t> words_;
    size_t n_ = 0;
};

/// Immutable bitvector with constant-time rank and O(log n) select.
///
/// rank1(i) counts ones among positions [0, i), so rank1(size()) is the
/// total number of ones. select1(r) returns the position of the r-th one,
/// r starting at 1.
class RankSelectBitVector {
  public:
    RankSelectBitVector() = default;
    explicit RankSelectBitVector(BitVector bits);

    bool get(size_t i) const { return bits_.get(i); }
    size_t size() const { return bits_.size(); }

    uint64_t rank1(size_t i) const;
    uint64_t rank0(size_t i) const { return i - rank1(i); }
    size_t select1(uint64_t r) const;

    uint64_t ones() const { return total_ones_; }
    const BitVector& raw() const { return bits_; }

  private:
    BitVector bits_;
    // one cumulative count per 512-bit superblock, one uint16 per 64-bit word
    std::vector<uint64_t> super_;
    std::vector<uint16_t> block_;
    uint64_t total_ones_ = 0;

    static constexpr size_t kWordsPerSuper = 8;
};

} // namespace tbwt
