#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drinact/action.hpp"

namespace drinact::oracle {

/// Enumeration domains are capped at 2^20 elements.
inline constexpr std::uint64_t kGuard = std::uint64_t{1} << 20;

/// Every reduced pair (u, v) on the curve, by exhaustive search, sorted.
/// TooLarge if q^deg f exceeds the guard.
std::vector<MumfordDivisor> enumerate_jacobian(const CurvePtr& curve);

/// #Pic0 from affine point counts over F_q, ..., F_{q^g} and the zeta function.
BigInt jacobian_order_by_points(const HyperCurve& curve);

/// All j in L^* whose module from_j(j) has the instance characteristic
/// polynomial up to twist, found with the dense solver. Sorted.
std::vector<FieldElement> enumerate_isogeny_class(const Instance& inst);

struct OrbitReport {
  std::size_t jacobian_size = 0;
  std::size_t class_size = 0;
  bool injective = false;
  bool surjective = false;
  std::size_t compat_pairs = 0;
  std::size_t compat_failures = 0;
  bool ok() const noexcept { return injective && surjective && compat_failures == 0 && jacobian_size == class_size; }
  std::string to_string() const;
};

/// Action map Pic0 -> isogeny class from the starting j, plus compatibility
/// on all pairs (|Pic0| <= 64) or 200 seeded random pairs.
OrbitReport orbit_check(const Instance& inst, std::uint64_t seed = 0);

/// Sort key for field elements and divisors.
bool element_less(const FieldElement& a, const FieldElement& b);
bool divisor_less(const MumfordDivisor& a, const MumfordDivisor& b);

}  // namespace drinact::oracle
