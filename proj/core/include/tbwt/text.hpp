#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tbwt {

constexpr uint8_t kSentinelByte = 0x00;

/// Null-terminated input string with its effective alphabet.
///
/// bytes holds the original symbol values with the sentinel 0x00 appended
/// at the last position; no interior byte equals the sentinel. Symbols are
/// remapped to dense codes [0, sigma) for the wavelet tree, code 0 being
/// the sentinel; from_dense inverts the mapping.
struct Text {
    std::vector<uint8_t> bytes;
    uint32_t sigma = 0;
    std::array<int16_t, 256> to_dense{}; // -1 where the byte does not occur
    std::vector<uint8_t> from_dense;

    size_t size() const { return bytes.size(); }

    uint8_t dense_at(size_t i) const {
        return static_cast<uint8_t>(to_dense[bytes[i]]);
    }

    /// Dense-coded copy of the whole text (sentinel = 0).
    std::vector<uint8_t> dense() const;
};

/// Validates raw input and appends the sentinel.
///
/// Interior bytes equal to the sentinel encoding are stripped when
/// strip_sentinel_bytes is set and rejected (ValidationError naming the
/// 0-based offset) otherwise. Empty input yields the one-symbol text "$".
Text ingest(std::span<const uint8_t> raw, bool strip_sentinel_bytes = false);

Text ingest(const std::string& raw, bool strip_sentinel_bytes = false);

} // namespace tbwt
