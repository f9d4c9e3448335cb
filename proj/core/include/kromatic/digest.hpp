#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace kromatic {

/// MurmurHash3 x64 128-bit. Used for bucketing fingerprints; never treated
/// as proof of equality.
std::array<std::uint64_t, 2> murmur3_x64_128(std::span<const std::uint8_t> data,
                                             std::uint32_t seed = 0);

std::string digest_hex(const std::array<std::uint64_t, 2>& h);

}  // namespace kromatic
