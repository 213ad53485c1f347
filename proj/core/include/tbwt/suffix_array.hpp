#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tbwt {

/// Suffix array of a dense-coded text whose last symbol is the unique
/// smallest one (code 0). SA-IS, O(n) time. Indices are 0-based.
std::vector<int32_t> build_suffix_array(std::span<const uint8_t> text);

} // namespace tbwt
