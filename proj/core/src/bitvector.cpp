#include "tbwt/bitvector.hpp"

#include <bit>
#include <stdexcept>

#include "tbwt/errors.hpp"

namespace tbwt {

BitVector::BitVector(size_t n_bits, bool fill) : n_(n_bits) {
    words_.assign((n_bits + 63) / 64, fill ? ~uint64_t{0} : 0);
    if (fill && n_bits % 64 != 0) {
        // keep padding bits zero so count_ones and == stay meaningful
        words_.back() &= (uint64_t{1} << (n_bits % 64)) - 1;
    }
}

uint64_t BitVector::count_ones() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
}

RankSelectBitVector::RankSelectBitVector(BitVector bits) : bits_(std::move(bits)) {
    const auto& words = bits_.words();
    super_.resize(words.size() / kWordsPerSuper + 1);
    block_.resize(words.size() + 1);
    uint64_t acc = 0;
    uint16_t in_super = 0;
    // one past the last word included, so rank at the very end stays valid
    for (size_t w = 0; w <= words.size(); ++w) {
        if (w % kWordsPerSuper == 0) {
            super_[w / kWordsPerSuper] = acc;
            in_super = 0;
        }
        block_[w] = in_super;
        if (w < words.size()) {
            uint32_t pc = std::popcount(words[w]);
            acc += pc;
            in_super = static_cast<uint16_t>(in_super + pc);
        }
    }
    total_ones_ = acc;
}

uint64_t RankSelectBitVector::rank1(size_t i) const {
    if (i > size()) throw ValidationError("rank1: index out of range");
    size_t w = i >> 6;
    uint64_t r = super_[w / kWordsPerSuper] + block_[w];
    if (i & 63) r += std::popcount(bits_.words()[w] & ((uint64_t{1} << (i & 63)) - 1));
    return r;
}

size_t RankSelectBitVector::select1(uint64_t r) const {
    if (r == 0 || r > total_ones_) throw ValidationError("select1: rank out of range");
    // binary search over superblocks, then scan words
    size_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (super_[mid] < r) lo = mid; else hi = mid - 1;
    }
    uint64_t rem = r - super_[lo];
    size_t w = lo * kWordsPerSuper;
    const auto& words = bits_.words();
    while (true) {
        uint32_t pc = std::popcount(words[w]);
        if (rem <= pc) break;
        rem -= pc;
        ++w;
    }
    uint64_t word = words[w];
    for (uint32_t b = 0;; ++b) {
        if (word & 1) {
            if (--rem == 0) return w * 64 + b;
        }
        word >>= 1;
    }
}

} // namespace tbwt
