#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tbwt/bitvector.hpp"

namespace tbwt {

/// Balanced binary wavelet tree over a dense-coded sequence.
///
/// Supports access, rank_c over prefixes and the pruned range enumeration
/// that backs getIntervals. Immutable after construction; concurrent reads
/// are safe.
class WaveletTree {
  public:
    WaveletTree() = default;
    WaveletTree(std::span<const uint8_t> seq, uint32_t sigma);

    uint8_t access(size_t i) const;

    /// Occurrences of c among the first prefix_len symbols.
    uint64_t rank(uint8_t c, size_t prefix_len) const;

    /// For every symbol c occurring in seq[lo..hi), reports
    /// (c, rank_c(lo), rank_c(hi)) in strictly ascending symbol order.
    /// Work is proportional to the wavelet-tree nodes visited, i.e.
    /// O(occ * (1 + log(sigma/occ))).
    void enumerate_range(size_t lo, size_t hi,
                         const std::function<void(uint8_t, uint64_t, uint64_t)>& emit) const;

    size_t size() const { return n_; }
    uint32_t sigma() const { return sigma_; }

    /// Payload bits if written to disk (level bit arrays, no rank scaffolding).
    uint64_t serialized_bits() const;

  private:
    struct Node {
        RankSelectBitVector bits;
        int32_t left = -1;
        int32_t right = -1;
        uint8_t lo = 0; // alphabet range [lo, hi] handled by this node
        uint8_t hi = 0;
    };

    int32_t build(std::span<const uint8_t> seq, std::vector<uint8_t>& scratch,
                  uint32_t lo, uint32_t hi);
    void enumerate_node(int32_t node, uint64_t a, uint64_t b,
                        const std::function<void(uint8_t, uint64_t, uint64_t)>& emit) const;

    std::vector<Node> nodes_;
    int32_t root_ = -1;
    size_t n_ = 0;
    uint32_t sigma_ = 0;
};

} // namespace tbwt
