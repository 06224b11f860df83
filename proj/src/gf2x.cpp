#include "gf2x.hpp"

#include <algorithm>
#include <array>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace drinact::gf2x {

namespace {

void mul_generic_loop(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
                      std::uint64_t* r) {
  for (std::size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      std::uint64_t lo = 0, hi = 0;
      const std::uint64_t x = a[i], y = b[j];
      for (int k = 0; k < 64; ++k)
        if ((x >> k) & 1) {
          lo ^= y << k;
          if (k) hi ^= y >> (64 - k);
        }
      r[i + j] ^= lo;
      r[i + j + 1] ^= hi;
    }
  }
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse4.1"))) void mul_clmul_loop(const std::uint64_t* a, std::size_t na,
                                                               const std::uint64_t* b, std::size_t nb,
                                                               std::uint64_t* r) {
  for (std::size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    const __m128i x = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < nb; ++j) {
      const __m128i y = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i p = _mm_clmulepi64_si128(x, y, 0);
      r[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
      r[i + j + 1] ^= static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    }
  }
}

bool have_pclmul() {
  static const bool ok = __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
  return ok;
}
#endif

const std::array<std::uint16_t, 256>& spread_table() {
  static const std::array<std::uint16_t, 256> table = [] {
    std::array<std::uint16_t, 256> t{};
    for (unsigned i = 0; i < 256; ++i) {
      std::uint16_t v = 0;
      for (unsigned k = 0; k < 8; ++k)
        if ((i >> k) & 1) v |= static_cast<std::uint16_t>(1u << (2 * k));
      t[i] = v;
    }
    return t;
  }();
  return table;
}

}  // namespace

Words add(const Words& a, const Words& b) {
  const Words& big = a.size() >= b.size() ? a : b;
  const Words& small = a.size() >= b.size() ? b : a;
  Words r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] ^= small[i];
  trim(r);
  return r;
}

Words mul(const Words& a, const Words& b) {
  if (a.empty() || b.empty()) return {};
  Words r(a.size() + b.size(), 0);
#if defined(__x86_64__)
  if (have_pclmul()) {
    mul_clmul_loop(a.data(), a.size(), b.data(), b.size(), r.data());
    trim(r);
    return r;
  }
#endif
  mul_generic_loop(a.data(), a.size(), b.data(), b.size(), r.data());
  trim(r);
  return r;
}

Words sqr(const Words& a) {
  const auto& t = spread_table();
  Words r(2 * a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t x = a[i];
    std::uint64_t lo = 0, hi = 0;
    for (int k = 0; k < 4; ++k) lo |= static_cast<std::uint64_t>(t[(x >> (8 * k)) & 0xff]) << (16 * k);
    for (int k = 0; k < 4; ++k) hi |= static_cast<std::uint64_t>(t[(x >> (32 + 8 * k)) & 0xff]) << (16 * k);
    r[2 * i] = lo;
    r[2 * i + 1] = hi;
  }
  trim(r);
  return r;
}

void divmod(const Words& a, const Words& b, Words* quot, Words& rem) {
  const int db = degree(b);
  rem = a;
  trim(rem);
  int dr = degree(rem);
  if (quot) quot->clear();
  if (dr < db) return;
  if (quot) quot->assign(static_cast<std::size_t>(dr - db) / 64 + 1, 0);
  const std::size_t nb = static_cast<std::size_t>(db) / 64 + 1;
  rem.push_back(0);
  for (int i = dr; i >= db; --i) {
    if (!((rem[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1)) continue;
    const std::size_t shift = static_cast<std::size_t>(i - db);
    xor_shifted(rem.data(), b.data(), nb, shift);
    if (quot) (*quot)[shift / 64] |= std::uint64_t{1} << (shift % 64);
  }
  trim(rem);
  if (quot) trim(*quot);
}

}  // namespace drinact::gf2x
