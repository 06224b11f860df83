#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "drinact/bigint.hpp"
#include "drinact/fq_poly.hpp"

namespace drinact {

class FieldElement;

/// L = F_q[X]/(p) for a monic irreducible p of degree d. Immutable after
/// construction; always held through std::shared_ptr so that elements can
/// refer back to it.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  /// Throws InvalidArgument unless `modulus` is monic, irreducible and of degree >= 1.
  static std::shared_ptr<const ExtField> create(const FqPoly& modulus);

  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t q() const noexcept { return base_.q(); }
  int degree() const noexcept { return degree_; }
  const FqPoly& modulus() const noexcept { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of X, i.e. the generator omega = gamma(X).
  FieldElement generator() const;
  FieldElement constant(std::uint32_t c) const;
  /// Reduces an arbitrary polynomial modulo p.
  FieldElement element(const FqPoly& poly) const;
  FieldElement element(std::span<const std::uint32_t> coeffs) const;
  FieldElement random(Rng& rng) const;
  FieldElement random_nonzero(Rng& rng) const;

  // Kernels on reduced representatives; used by FieldElement and by the
  // Ore-polynomial code.
  FqPoly reduce(const FqPoly& a) const;
  FqPoly mul(const FqPoly& a, const FqPoly& b) const;
  FqPoly frobenius(const FqPoly& a, unsigned k) const;

 private:
  explicit ExtField(const FqPoly& modulus);
  void reduce_binary(std::vector<std::uint64_t>& w) const;
  std::vector<std::uint64_t> apply_matrix(const std::vector<std::vector<std::uint64_t>>& cols,
                                          const std::vector<std::uint64_t>& x) const;

  PrimeField base_;
  FqPoly modulus_;
  int degree_;
  // q = 2: exponents of p below the leading term, and whether the word-wise
  // sparse reduction applies.
  std::vector<int> low_terms_;
  bool sparse_reduction_ = false;
  // q = 2: images of X^i under x -> x^2 and x -> x^4 (bit-packed columns).
  std::vector<std::vector<std::uint64_t>> frob1_, frob2_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Element of L, stored as its reduced representative.
class FieldElement {
 public:
  FieldElement(ExtFieldPtr field, FqPoly value) : field_(std::move(field)), value_(std::move(value)) {}

  const ExtFieldPtr& field() const noexcept { return field_; }
  const FqPoly& value() const noexcept { return value_; }
  std::uint32_t coeff(std::size_t i) const noexcept { return value_.coeff(i); }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_one() const noexcept { return value_.is_one(); }
  /// True when the element lies in the prime field F_q.
  bool in_base_field() const noexcept { return value_.degree() <= 0; }

  FieldElement operator-() const { return {field_, -value_}; }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// DivisionByZero for 0.
  FieldElement inverse() const;
  FieldElement scaled(std::uint32_t c) const { return {field_, value_.scaled(c)}; }
  FieldElement square() const { return *this * *this; }
  FieldElement pow(const BigInt& e) const;
  /// x^(q^k).
  FieldElement frobenius(unsigned k = 1) const { return {field_, field_->frobenius(value_, k)}; }

 private:
  void check_same(const FieldElement& o) const;

  ExtFieldPtr field_;
  FqPoly value_;
};

/// Frobenius power x^(q^k); the free-function form of FieldElement::frobenius.
inline FieldElement frobenius_power(const FieldElement& x, unsigned k) { return x.frobenius(k); }

/// N_{L/F_q}(x) = x^((q^d - 1)/(q - 1)), returned as an element of F_q inside L.
FieldElement norm_to_base(const FieldElement& x);

}  // namespace drinact
