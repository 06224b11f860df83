#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "drinact/fq_poly.hpp"

namespace drinact {

/// Dense vector over F_q; bit-packed when q = 2.
class FqVector {
 public:
  FqVector(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }
  void resize(std::size_t n);

  std::uint32_t get(std::size_t i) const noexcept;
  void set(std::size_t i, std::uint32_t c);
  bool is_zero() const noexcept;
  /// Index of the first nonzero entry at or after `from`, or size().
  std::size_t first_nonzero(std::size_t from = 0) const noexcept;

  /// this += c * o, touching only entries at index >= from.
  void add_scaled(const FqVector& o, std::uint32_t c, std::size_t from = 0);
  void scale(std::uint32_t c);
  /// Adds the coefficients of p into entries offset, offset+1, ...
  void add_poly(std::size_t offset, const FqPoly& p);

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<std::uint64_t> bits_;    // q = 2
  std::vector<std::uint32_t> coeffs_;  // q > 2
};

/// Incremental Gaussian elimination over F_q. Vectors are added one at a
/// time; each either extends the basis or is reported together with its
/// coordinates in terms of the previously added vectors.
class SpanSolver {
 public:
  SpanSolver(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t count() const noexcept { return count_; }

  /// Registers v as vector number count(). Returns nullopt if v was
  /// independent of the earlier vectors (the basis grows); otherwise returns
  /// c with v = sum c_i v_i over the earlier vectors, and v is still counted
  /// (its own coefficient slot stays zero in later expressions).
  std::optional<std::vector<std::uint32_t>> add(const FqVector& v);
  /// Coordinates of v in terms of the added vectors, or nullopt if outside the span.
  std::optional<std::vector<std::uint32_t>> express(const FqVector& v) const;

 private:
  struct Row {
    FqVector vec;
    FqVector comb;
    std::size_t pivot;
  };
  /// Reduces v in place; returns the accumulated combination.
  FqVector reduce(FqVector& v) const;
  std::vector<std::uint32_t> to_coeffs(const FqVector& comb) const;

  PrimeField field_;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

}  // namespace drinact
