#include "tbwt/fm_index.hpp"

#include "tbwt/errors.hpp"

namespace tbwt {

FMIndex FMIndex::build(const Text& t) {
    FMIndex fm;
    fm.bwt_ = build_bwt(t);
    fm.wt_ = WaveletTree(fm.bwt_.last_column, t.sigma);
    fm.alphabet_ = t.from_dense;
    return fm;
}

void FMIndex::check_interval(uint64_t lb, uint64_t rb) const {
    if (lb < 1 || rb > size() || lb > rb)
        throw ValidationError("invalid BWT interval [" + std::to_string(lb) + "," +
                              std::to_string(rb) + "]");
}

Interval FMIndex::backward_step(uint8_t c, uint64_t lb, uint64_t rb) const {
    check_interval(lb, rb);
    if (c >= sigma()) throw ValidationError("backward_step: symbol out of range");
    uint64_t i = bwt_.C[c] + wt_.rank(c, lb - 1) + 1;
    uint64_t j = bwt_.C[c] + wt_.rank(c, rb);
    return Interval{i, j};
}

std::vector<SymbolInterval> FMIndex::get_intervals(uint64_t lb, uint64_t rb) const {
    std::vector<SymbolInterval> out;
    for_each_interval(lb, rb, [&](const SymbolInterval& si) { out.push_back(si); });
    return out;
}

uint64_t FMIndex::lf(uint64_t row) const {
    if (row < 1 || row > size()) throw ValidationError("lf: row out of range");
    uint8_t c = bwt_.last_column[row - 1];
    return bwt_.C[c] + wt_.rank(c, row);
}

uint64_t FMIndex::serialized_size_bytes() const {
    return (wt_.serialized_bits() + 7) / 8;
}

} // namespace tbwt
