#include "tbwt/wavelet_tree.hpp"

#include "tbwt/errors.hpp"

namespace tbwt {

WaveletTree::WaveletTree(std::span<const uint8_t> seq, uint32_t sigma)
    : n_(seq.size()), sigma_(sigma) {
    if (sigma == 0 || sigma > 256) throw ValidationError("wavelet tree: invalid alphabet size");
    std::vector<uint8_t> scratch;
    root_ = build(seq, scratch, 0, sigma - 1);
}

int32_t WaveletTree::build(std::span<const uint8_t> seq, std::vector<uint8_t>& scratch,
                           uint32_t lo, uint32_t hi) {
    int32_t idx = static_cast<int32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[idx].lo = static_cast<uint8_t>(lo);
    nodes_[idx].hi = static_cast<uint8_t>(hi);
    if (lo == hi) return idx;

    uint32_t mid = lo + (hi - lo) / 2;
    BitVector bv(seq.size());
    std::vector<uint8_t> left_seq, right_seq;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] > mid) {
            bv.set(i);
            right_seq.push_back(seq[i]);
        } else {
            left_seq.push_back(seq[i]);
        }
    }
    nodes_[idx].bits = RankSelectBitVector(std::move(bv));
    int32_t lc = build(left_seq, scratch, lo, mid);
    int32_t rc = build(right_seq, scratch, mid + 1, hi);
    nodes_[idx].left = lc;
    nodes_[idx].right = rc;
    return idx;
}

uint8_t WaveletTree::access(size_t i) const {
    if (i >= n_) throw ValidationError("wavelet access: index out of range");
    int32_t v = root_;
    while (nodes_[v].lo != nodes_[v].hi) {
        const Node& node = nodes_[v];
        if (node.bits.get(i)) {
            i = node.bits.rank1(i);
            v = node.right;
        } else {
            i = node.bits.rank0(i);
            v = node.left;
        }
    }
    return nodes_[v].lo;
}

uint64_t WaveletTree::rank(uint8_t c, size_t prefix_len) const {
    if (c >= sigma_) throw ValidationError("wavelet rank: symbol out of range");
    if (prefix_len > n_) throw ValidationError("wavelet rank: prefix length out of range");
    int32_t v = root_;
    uint64_t i = prefix_len;
    while (nodes_[v].lo != nodes_[v].hi) {
        const Node& node = nodes_[v];
        uint32_t mid = node.lo + (node.hi - node.lo) / 2;
        if (c <= mid) {
            i = node.bits.rank0(i);
            v = node.left;
        } else {
            i = node.bits.rank1(i);
            v = node.right;
        }
    }
    return i;
}

void WaveletTree::enumerate_range(size_t lo, size_t hi,
                                  const std::function<void(uint8_t, uint64_t, uint64_t)>& emit) const {
    if (lo >= hi || hi > n_) throw ValidationError("wavelet enumerate: invalid range");
    enumerate_node(root_, lo, hi, emit);
}

void WaveletTree::enumerate_node(int32_t v, uint64_t a, uint64_t b,
                                 const std::function<void(uint8_t, uint64_t, uint64_t)>& emit) const {
    const Node& node = nodes_[v];
    if (node.lo == node.hi) {
        emit(node.lo, a, b);
        return;
    }
    uint64_t a0 = node.bits.rank0(a);
    uint64_t b0 = node.bits.rank0(b);
    if (b0 > a0) enumerate_node(node.left, a0, b0, emit);
    if (b - b0 > a - a0) enumerate_node(node.right, a - a0, b - b0, emit);
}

uint64_t WaveletTree::serialized_bits() const {
    uint64_t total = 0;
    for (const Node& node : nodes_)
        if (node.lo != node.hi) total += node.bits.size();
    return total;
}

} // namespace tbwt
