#pragma once

// Brute-force reference helpers shared by the unit tests. Nothing here calls
// the library routine it is used to check.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "drinact/action.hpp"
#include "drinact/ext_field.hpp"
#include "drinact/ore.hpp"

namespace support {

using namespace drinact;

inline FqPoly poly2(std::initializer_list<int> exps) {
  FqPoly p(PrimeField(2));
  for (int e : exps) p.set_coeff(static_cast<std::size_t>(e), 1);
  return p;
}

inline FqPoly poly_of(PrimeField F, std::vector<std::uint32_t> c) { return FqPoly(F, c); }

/// The n-th polynomial of degree < k (base-q digits).
inline FqPoly poly_index(PrimeField F, std::uint64_t n, int k) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(k));
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(n % F.q());
    n /= F.q();
  }
  return FqPoly(F, c);
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Trial division by every monic polynomial of degree 1 .. deg/2.
inline bool brute_irreducible(const FqPoly& p) {
  const PrimeField F = p.field();
  const int n = p.degree();
  if (n <= 0) return false;
  for (int k = 1; 2 * k <= n; ++k)
    for (std::uint64_t i = 0; i < ipow(F.q(), k); ++i) {
      const FqPoly d = poly_index(F, i, k) + FqPoly::monomial(F, 1, static_cast<std::size_t>(k));
      if ((p % d).is_zero()) return false;
    }
  return true;
}

inline std::vector<FieldElement> all_elements(const ExtFieldPtr& L) {
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < ipow(L->q(), L->degree()); ++i) out.push_back(L->element(poly_index(L->base(), i, L->degree())));
  return out;
}

enum class Splitting { Split, Ramified, Inert };

/// Counts roots of Y^2 + hY - f modulo r by enumerating every residue.
inline Splitting classify(const HyperCurve& c, const FqPoly& r) {
  const PrimeField F = c.base();
  int roots = 0;
  for (std::uint64_t i = 0; i < ipow(F.q(), r.degree()); ++i) {
    const FqPoly v = poly_index(F, i, r.degree());
    if (((v * v + c.h() * v - c.f()) % r).is_zero()) ++roots;
  }
  return roots == 0 ? Splitting::Inert : roots == 1 ? Splitting::Ramified : Splitting::Split;
}

/// Schoolbook Ore product written against the definition, term by term.
inline OrePoly naive_mul(const OrePoly& a, const OrePoly& b) {
  const ExtFieldPtr& L = a.field();
  std::vector<FieldElement> out(static_cast<std::size_t>(std::max(0, a.degree() + b.degree() + 1)), L->zero());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) {
      FieldElement t = b.coeff(static_cast<std::size_t>(j));
      for (int k = 0; k < i; ++k) t = t.pow(BigInt(L->q()));
      out[static_cast<std::size_t>(i + j)] += a.coeff(static_cast<std::size_t>(i)) * t;
    }
  return OrePoly(L, out);
}

/// a(phi_X) as a sum of left powers of phi_X.
inline OrePoly naive_phi(const DrinfeldModule& phi, const FqPoly& a) {
  const ExtFieldPtr& L = phi.field();
  OrePoly acc(L), power = OrePoly::constant(L->one());
  for (int i = 0; i <= a.degree(); ++i) {
    if (i) power = naive_mul(phi.phi_x(), power);
    const auto c = a.coeff(static_cast<std::size_t>(i));
    if (c) acc += power.left_scaled(L->constant(c));
  }
  return acc;
}

inline OrePoly random_ore(const ExtFieldPtr& L, int deg, Rng& rng) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= deg; ++i) c.push_back(i == deg ? L->random_nonzero(rng) : L->random(rng));
  return OrePoly(L, c);
}

/// Determinant over F_q by Gaussian elimination.
inline std::uint32_t det(PrimeField F, std::vector<std::vector<std::uint32_t>> m) {
  const std::size_t n = m.size();
  std::uint32_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = F.neg(d);
    }
    d = F.mul(d, m[c][c]);
    const std::uint32_t inv = F.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint32_t k = F.mul(m[r][c], inv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(k, m[c][j]));
    }
  }
  return d;
}

}  // namespace support
