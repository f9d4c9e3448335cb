#include "kromatic/digest.hpp"

#include <cstring>

namespace kromatic {

namespace {

inline std::uint64_t rotl64(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

inline std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

}  // namespace

// Public-domain MurmurHash3 (Austin Appleby), x64 128-bit variant.
std::array<std::uint64_t, 2> murmur3_x64_128(std::span<const std::uint8_t> data,
                                             std::uint32_t seed) {
  const std::size_t nblocks = data.size() / 16;
  std::uint64_t h1 = seed, h2 = seed;
  const std::uint64_t c1 = 0x87c37b91114253d5ULL;
  const std::uint64_t c2 = 0x4cf5ad432745937fULL;

  for (std::size_t i = 0; i < nblocks; ++i) {
    std::uint64_t k1, k2;
    std::memcpy(&k1, data.data() + i * 16, 8);
    std::memcpy(&k2, data.data() + i * 16 + 8, 8);
    k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
    h1 = rotl64(h1, 27); h1 += h2; h1 = h1 * 5 + 0x52dce729;
    k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
    h2 = rotl64(h2, 31); h2 += h1; h2 = h2 * 5 + 0x38495ab5;
  }

  const std::uint8_t* tail = data.data() + nblocks * 16;
  std::uint64_t k1 = 0, k2 = 0;
  switch (data.size() & 15) {
    case 15: k2 ^= std::uint64_t(tail[14]) << 48; [[fallthrough]];
    case 14: k2 ^= std::uint64_t(tail[13]) << 40; [[fallthrough]];
    case 13: k2 ^= std::uint64_t(tail[12]) << 32; [[fallthrough]];
    case 12: k2 ^= std::uint64_t(tail[11]) << 24; [[fallthrough]];
    case 11: k2 ^= std::uint64_t(tail[10]) << 16; [[fallthrough]];
    case 10: k2 ^= std::uint64_t(tail[9]) << 8; [[fallthrough]];
    case 9:  k2 ^= std::uint64_t(tail[8]);
             k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2; [[fallthrough]];
    case 8:  k1 ^= std::uint64_t(tail[7]) << 56; [[fallthrough]];
    case 7:  k1 ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6:  k1 ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5:  k1 ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4:  k1 ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3:  k1 ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2:  k1 ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:  k1 ^= std::uint64_t(tail[0]);
             k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
  }

  h1 ^= data.size();
  h2 ^= data.size();
  h1 += h2;
  h2 += h1;
  h1 = fmix64(h1);
  h2 = fmix64(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

std::string digest_hex(const std::array<std::uint64_t, 2>& h) {
  static const char* hexdigits = "0123456789abcdef";
  std::string out(32, '0');
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < 16; ++i)
      out[half * 16 + i] = hexdigits[h[half] >> (60 - 4 * i) & 0xf];
  return out;
}

}  // namespace kromatic
