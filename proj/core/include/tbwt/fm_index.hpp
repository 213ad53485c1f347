#pragma once

#include <cstdint>
#include <vector>

#include "tbwt/bwt.hpp"
#include "tbwt/text.hpp"
#include "tbwt/wavelet_tree.hpp"

namespace tbwt {

/// Row interval [lb, rb] of the sorted rotation matrix, 1-based inclusive.
/// lb > rb encodes the empty interval.
struct Interval {
    uint64_t lb = 1;
    uint64_t rb = 0;

    bool empty() const { return lb > rb; }
    uint64_t width() const { return empty() ? 0 : rb - lb + 1; }
    bool operator==(const Interval&) const = default;
};

struct SymbolInterval {
    uint8_t symbol; // dense code
    Interval range;
    bool operator==(const SymbolInterval&) const = default;
};

/// BWT plus wavelet tree: backward search and the getIntervals enumeration.
class FMIndex {
  public:
    static FMIndex build(const Text& t);

    uint64_t size() const { return bwt_.size(); }
    uint32_t sigma() const { return bwt_.sigma; }
    const BwtData& bwt() const { return bwt_; }
    const WaveletTree& wavelet() const { return wt_; }
    const std::vector<uint8_t>& alphabet() const { return alphabet_; }

    /// One backward search step: maps the omega-interval [lb, rb] to the
    /// c-omega-interval. Empty result iff c-omega does not occur.
    Interval backward_step(uint8_t c, uint64_t lb, uint64_t rb) const;

    /// All (c, c-omega-interval) pairs for symbols c preceding rows of
    /// [lb, rb], in ascending symbol order.
    std::vector<SymbolInterval> get_intervals(uint64_t lb, uint64_t rb) const;

    /// Streaming variant of get_intervals; avoids the output vector on the
    /// hot path of the level traversal.
    template <typename Fn>
    void for_each_interval(uint64_t lb, uint64_t rb, Fn&& fn) const {
        check_interval(lb, rb);
        wt_.enumerate_range(lb - 1, rb, [&](uint8_t c, uint64_t a, uint64_t b) {
            fn(SymbolInterval{c, Interval{bwt_.C[c] + a + 1, bwt_.C[c] + b}});
        });
    }

    /// Wavelet-tree LF-mapping, 1-based rows.
    uint64_t lf(uint64_t row) const;

    /// Serialized footprint of the wavelet-tree-encoded BWT, in bytes.
    uint64_t serialized_size_bytes() const;

  private:
    void check_interval(uint64_t lb, uint64_t rb) const;

    BwtData bwt_;
    WaveletTree wt_;
    std::vector<uint8_t> alphabet_; // dense code -> original byte
};

} // namespace tbwt
