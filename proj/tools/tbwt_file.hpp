#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tbwt/tunnel.hpp"

namespace tbwt::cli {

/// Binary container for a tunneled BWT.
///
/// Layout, all integers little-endian:
///   magic "TBWT1" (5) | version u8 | flags u8 | n_original u64 | p u64 |
///   sigma u16 | k_used u32 | alphabet map (sigma bytes) |
///   L (p bytes, original symbol values) |
///   D_out ((p+1) bits, LSB-first in u64 words, zero-padded) |
///   q u64 | D_in ((q+1) bits, same packing)
constexpr char kMagic[5] = {'T', 'B', 'W', 'T', '1'};
constexpr uint8_t kVersion = 1;

std::vector<uint8_t> serialize_tbwt(const TunneledBWT& t);
TunneledBWT parse_tbwt(std::span<const uint8_t> data);

void write_tbwt_file(const TunneledBWT& t, const std::string& path);
TunneledBWT read_tbwt_file(const std::string& path);

} // namespace tbwt::cli
