#include "drinact/prime_field.hpp"

#include <string>

namespace drinact {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q < 2 || q >= (1u << 16) || !is_prime(q))
    raise(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime below 2^16");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % q_;
  std::uint32_t base = a % q_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % q_ == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 in F_q");
  return pow(a, q_ - 2);
}

}  // namespace drinact
