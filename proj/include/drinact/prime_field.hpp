#pragma once

#include <cstdint>

#include "drinact/error.hpp"

namespace drinact {

/// The prime field F_q, 2 <= q < 2^16. Residues are plain uint32_t in [0, q).
class PrimeField {
 public:
  /// Throws InvalidArgument unless q is a prime below 2^16.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  bool is_binary() const noexcept { return q_ == 2; }

  std::uint32_t reduce(std::uint64_t x) const noexcept { return static_cast<std::uint32_t>(x % q_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a = 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace drinact
