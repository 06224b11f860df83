#pragma once

// Word-level kernels for F_2[X]: bit i of the word vector is the
// coefficient of X^i. Vectors are kept trimmed (no high zero words).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace drinact::gf2x {

using Words = std::vector<std::uint64_t>;

inline void trim(Words& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

inline int degree(const Words& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i]) return static_cast<int>(64 * i + 63 - __builtin_clzll(w[i]));
  return -1;
}

inline bool bit(const Words& w, std::size_t i) {
  return i / 64 < w.size() && ((w[i / 64] >> (i % 64)) & 1);
}

inline void flip_bit(Words& w, std::size_t i) {
  if (w.size() <= i / 64) w.resize(i / 64 + 1, 0);
  w[i / 64] ^= std::uint64_t{1} << (i % 64);
}

/// dst ^= src * X^shift; dst must already be large enough.
inline void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::size_t shift) {
  const std::size_t off = shift / 64;
  const unsigned s = shift % 64;
  if (s == 0) {
    for (std::size_t i = 0; i < n; ++i) dst[i + off] ^= src[i];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i + off] ^= (src[i] << s) | carry;
    carry = src[i] >> (64 - s);
  }
  if (carry) dst[n + off] ^= carry;
}

/// Xors a 64-bit chunk at an arbitrary bit position (pos may be negative,
/// in which case the low bits that would fall below X^0 must be zero).
inline void xor_chunk(Words& dst, std::uint64_t chunk, long pos) {
  if (pos < 0) {
    chunk >>= -pos;
    pos = 0;
  }
  const std::size_t w = static_cast<std::size_t>(pos) / 64;
  const unsigned s = static_cast<unsigned>(pos) % 64;
  dst[w] ^= chunk << s;
  if (s && (chunk >> (64 - s))) dst[w + 1] ^= chunk >> (64 - s);
}

Words add(const Words& a, const Words& b);
Words mul(const Words& a, const Words& b);
Words sqr(const Words& a);

/// Long division; quot may be null. b must be nonzero.
void divmod(const Words& a, const Words& b, Words* quot, Words& rem);

}  // namespace drinact::gf2x
