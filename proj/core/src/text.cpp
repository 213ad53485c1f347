#include "tbwt/text.hpp"

#include <string>

#include "tbwt/errors.hpp"

namespace tbwt {

std::vector<uint8_t> Text::dense() const {
    std::vector<uint8_t> out(bytes.size());
    for (size_t i = 0; i < bytes.size(); ++i) out[i] = dense_at(i);
    return out;
}

Text ingest(std::span<const uint8_t> raw, bool strip_sentinel_bytes) {
    Text t;
    t.bytes.reserve(raw.size() + 1);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == kSentinelByte) {
            if (!strip_sentinel_bytes)
                throw ValidationError("input contains sentinel byte 0x00 at offset " +
                                      std::to_string(i) + " (0-based)");
            continue;
        }
        t.bytes.push_back(raw[i]);
    }
    t.bytes.push_back(kSentinelByte);

    std::array<bool, 256> present{};
    for (uint8_t b : t.bytes) present[b] = true;
    t.to_dense.fill(-1);
    for (int b = 0; b < 256; ++b) {
        if (present[b]) {
            t.to_dense[b] = static_cast<int16_t>(t.sigma++);
            t.from_dense.push_back(static_cast<uint8_t>(b));
        }
    }
    return t;
}

Text ingest(const std::string& raw, bool strip_sentinel_bytes) {
    return ingest(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(raw.data()), raw.size()),
                  strip_sentinel_bytes);
}

} // namespace tbwt
