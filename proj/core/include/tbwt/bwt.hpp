#pragma once

#include <cstdint>
#include <vector>

#include "tbwt/text.hpp"

namespace tbwt {

/// Burrows-Wheeler transform of a null-terminated text.
///
/// last_column holds dense symbol codes. C[c] counts symbols strictly
/// smaller than c, so C has sigma+1 entries with C[0] = 0 and C[sigma] = n.
/// text_row is the 1-based row of the sorted rotation matrix that equals
/// the text itself. Row indices are 1-based throughout.
struct BwtData {
    std::vector<uint8_t> last_column;
    std::vector<uint64_t> C;
    uint64_t text_row = 0;
    uint32_t sigma = 0;

    uint64_t size() const { return last_column.size(); }
};

/// Last column of the lexicographically sorted rotation matrix. Because the
/// text is null-terminated this equals the suffix-array-derived BWT.
BwtData build_bwt(const Text& t);

/// LF-mapping LF[i] = C[L[i]] + rank_{L[i]}(L, i). O(n) scan per call;
/// use FMIndex::lf for the wavelet-tree version.
uint64_t lf_step(const BwtData& b, uint64_t row);

} // namespace tbwt
