#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "drinact/bigint.hpp"
#include "drinact/fq_poly.hpp"
#include "drinact/rng.hpp"

namespace drinact {

/// Imaginary hyperelliptic curve Y^2 + hY = f over F_q, deg f odd.
class HyperCurve {
 public:
  const PrimeField& base() const noexcept { return h_.field(); }
  const FqPoly& h() const noexcept { return h_; }
  const FqPoly& f() const noexcept { return f_; }
  int genus() const noexcept { return (f_.degree() - 1) / 2; }
  /// Leading coefficient of f.
  std::uint32_t alpha() const noexcept { return f_.leading(); }

  /// v^2 + h*v - f.
  FqPoly equation_at(const FqPoly& v) const;

  friend bool operator==(const HyperCurve& a, const HyperCurve& b) noexcept {
    return a.h_ == b.h_ && a.f_ == b.f_;
  }

 private:
  friend std::shared_ptr<const HyperCurve> curve_validate(const FqPoly& h, const FqPoly& f);
  HyperCurve(FqPoly h, FqPoly f) : h_(std::move(h)), f_(std::move(f)) {}
  FqPoly h_, f_;
};

using CurvePtr = std::shared_ptr<const HyperCurve>;

/// ZeroH, DegreeConstraintViolated or SingularCurve on failure.
CurvePtr curve_validate(const FqPoly& h, const FqPoly& f);

/// Reduced Mumford pair (u, v): u monic, deg u <= genus, deg v < deg u,
/// u | v^2 + hv - f.
class MumfordDivisor {
 public:
  static MumfordDivisor identity(CurvePtr curve);

  const CurvePtr& curve() const noexcept { return curve_; }
  const FqPoly& u() const noexcept { return u_; }
  const FqPoly& v() const noexcept { return v_; }
  bool is_identity() const noexcept { return u_.is_one(); }

  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) noexcept {
    return *a.curve_ == *b.curve_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  friend MumfordDivisor mumford_validate(const CurvePtr& curve, const FqPoly& u, const FqPoly& v);
  friend MumfordDivisor make_reduced(const CurvePtr& curve, FqPoly u, FqPoly v);
  MumfordDivisor(CurvePtr curve, FqPoly u, FqPoly v) : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)) {}
  CurvePtr curve_;
  FqPoly u_, v_;
};

/// Reduces v mod u, then checks the invariants. NotMonic, DegreeTooLarge, DivisibilityFails.
MumfordDivisor mumford_validate(const CurvePtr& curve, const FqPoly& u, const FqPoly& v);

MumfordDivisor jac_add(const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor jac_neg(const MumfordDivisor& a);
MumfordDivisor jac_scalar_mul(const MumfordDivisor& a, const BigInt& n);

/// Reduced class of the ideal <r, Y - v>; r monic with r | v^2 + hv - f.
MumfordDivisor ideal_to_class(const CurvePtr& curve, const FqPoly& r, const FqPoly& v);

/// Roots v (deg v < deg r) of Y^2 + hY - f modulo a monic irreducible r:
/// none when r is inert, one when ramified, two when split.
std::vector<FqPoly> prime_roots(const HyperCurve& curve, const FqPoly& r, Rng& rng);

/// Random prime divisor (r, v) with r irreducible of degree k <= genus;
/// inert candidates are skipped. GenerationFailed after 100*k + 100 attempts.
MumfordDivisor random_prime_divisor(const CurvePtr& curve, std::size_t k, Rng& rng);

/// Sum of up to three random prime divisors of random degree.
MumfordDivisor random_divisor(const CurvePtr& curve, Rng& rng);

}  // namespace drinact
