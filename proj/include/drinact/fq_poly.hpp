#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drinact/bigint.hpp"
#include "drinact/prime_field.hpp"
#include "drinact/rng.hpp"

namespace drinact {

/// Univariate polynomial over F_q in canonical (trimmed) form.
///
/// Storage is little-endian. For q = 2 the coefficients are bit-packed into
/// 64-bit words (bit i of the vector is the coefficient of X^i); for q > 2
/// each slot holds one residue.
class FqPoly {
 public:
  explicit FqPoly(PrimeField field) : field_(field) {}
  FqPoly(PrimeField field, std::span<const std::uint32_t> coeffs);

  static FqPoly constant(PrimeField field, std::uint32_t c);
  static FqPoly monomial(PrimeField field, std::uint32_t c, std::size_t n);
  static FqPoly x(PrimeField field) { return monomial(field, 1, 1); }
  /// Raw storage constructor, see raw().
  static FqPoly from_raw(PrimeField field, std::vector<std::uint64_t> raw);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }

  int degree() const noexcept;
  bool is_zero() const noexcept { return data_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return degree() <= 0; }
  bool is_monic() const noexcept { return !is_zero() && leading() == 1; }

  std::uint32_t coeff(std::size_t i) const noexcept;
  void set_coeff(std::size_t i, std::uint32_t c);
  std::uint32_t leading() const noexcept { return is_zero() ? 0 : coeff(static_cast<std::size_t>(degree())); }
  std::vector<std::uint32_t> coefficients() const;
  /// Bit words for q = 2, one residue per slot otherwise; always trimmed.
  const std::vector<std::uint64_t>& raw() const noexcept { return data_; }

  FqPoly monic() const;
  FqPoly scaled(std::uint32_t c) const;
  FqPoly derivative() const;
  FqPoly shifted(std::size_t n) const;
  std::uint32_t eval(std::uint32_t x) const noexcept;

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& other);
  FqPoly& operator-=(const FqPoly& other);
  FqPoly& operator*=(const FqPoly& other) { return *this = *this * other; }

  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) noexcept {
    return a.field_ == b.field_ && a.data_ == b.data_;
  }

  /// Human-readable form such as "X^3 + 2*X + 1"; used in diagnostics.
  std::string to_string() const;

 private:
  void trim() noexcept;
  void check_same(const FqPoly& other) const;

  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

/// Quotient and remainder; b must be nonzero (DivisionByZero otherwise).
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
inline FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }
inline FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);

struct Xgcd {
  FqPoly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
Xgcd xgcd(const FqPoly& a, const FqPoly& b);

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m);
/// a^q mod m.
FqPoly frobenius_mod(const FqPoly& a, const FqPoly& m);
/// Inverse of a modulo m; DivisionByZero if gcd(a, m) != 1.
FqPoly invmod(const FqPoly& a, const FqPoly& m);

/// Deterministic factor order: by degree, then lexicographically on the
/// little-endian coefficient vector.
bool factor_order_less(const FqPoly& a, const FqPoly& b);

bool is_irreducible(const FqPoly& p);

struct Factorization {
  std::uint32_t unit = 1;
  std::vector<std::pair<FqPoly, unsigned>> factors;

  FqPoly recompose(PrimeField field) const;
};

/// Full factorization (squarefree, distinct-degree, equal-degree splitting).
/// The equal-degree stage draws from a generator seeded with `seed`.
Factorization factor(const FqPoly& u, std::uint64_t seed = 0);

/// Smallest (in factor order) monic irreducible factor of a nonconstant u.
FqPoly smallest_prime_factor(const FqPoly& u);

/// Random polynomial of degree < n (uniform coefficients).
FqPoly random_poly(PrimeField field, std::size_t n, Rng& rng);
/// Random monic polynomial of exact degree n.
FqPoly random_monic(PrimeField field, std::size_t n, Rng& rng);

/// Monic irreducible of exact degree d; GenerationFailed after 100*d trials.
FqPoly random_irreducible(PrimeField field, std::size_t d, Rng& rng);
FqPoly random_irreducible(PrimeField field, std::size_t d, std::uint64_t seed);

/// Largest power k with r^k | u, for nonconstant r and nonzero u.
unsigned valuation(const FqPoly& u, const FqPoly& r);

}  // namespace drinact
