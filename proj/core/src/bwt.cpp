#include "tbwt/bwt.hpp"

#include "tbwt/errors.hpp"
#include "tbwt/suffix_array.hpp"

namespace tbwt {

BwtData build_bwt(const Text& t) {
    const size_t n = t.size();
    std::vector<uint8_t> dense = t.dense();
    std::vector<int32_t> sa = build_suffix_array(dense);

    BwtData b;
    b.sigma = t.sigma;
    b.last_column.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int32_t start = sa[i];
        b.last_column[i] = dense[(start + n - 1) % n];
        if (start == 0) b.text_row = i + 1;
    }
    b.C.assign(t.sigma + 1, 0);
    for (uint8_t c : b.last_column) b.C[c + 1]++;
    for (uint32_t c = 0; c < t.sigma; ++c) b.C[c + 1] += b.C[c];
    return b;
}

uint64_t lf_step(const BwtData& b, uint64_t row) {
    if (row < 1 || row > b.size()) throw ValidationError("lf_step: row out of range");
    uint8_t c = b.last_column[row - 1];
    uint64_t rank = 0;
    for (uint64_t i = 0; i < row; ++i)
        if (b.last_column[i] == c) ++rank;
    return b.C[c] + rank;
}

} // namespace tbwt
