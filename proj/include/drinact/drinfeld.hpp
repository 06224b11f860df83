#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "drinact/ext_field.hpp"
#include "drinact/fq_poly.hpp"
#include "drinact/ore.hpp"

namespace drinact {

/// Rank-2 Drinfeld F_q[X]-module over L, given by phi_X = delta*t^2 + g*t + omega.
class DrinfeldModule {
 public:
  /// InvalidArgument if delta = 0 or the elements live in different fields.
  DrinfeldModule(FieldElement delta, FieldElement g, FieldElement omega);

  /// j != 0: (1/j, 1); j = 0: (1, 0).
  static DrinfeldModule from_j(const FieldElement& j, const FieldElement& omega);

  const ExtFieldPtr& field() const noexcept { return delta_.field(); }
  const FieldElement& delta() const noexcept { return delta_; }
  const FieldElement& g() const noexcept { return g_; }
  const FieldElement& omega() const noexcept { return omega_; }

  OrePoly phi_x() const;
  /// g^(q+1) / delta.
  FieldElement j_invariant() const;

  /// phi_a = a(phi_X), by Horner's rule.
  OrePoly eval(const FqPoly& a) const;
  /// p * phi_X, using cached Frobenius images of the three coefficients.
  OrePoly right_mul_phi_x(const OrePoly& p) const;

  friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) noexcept {
    return a.delta_ == b.delta_ && a.g_ == b.g_ && a.omega_ == b.omega_;
  }

 private:
  FieldElement delta_, g_, omega_;
  // twists_[i] = (delta, g, omega)^(q^i) for 0 <= i < d.
  struct Twist {
    FieldElement delta, g, omega;
  };
  std::shared_ptr<const std::vector<Twist>> twists_;
};

inline OrePoly phi_eval(const DrinfeldModule& phi, const FqPoly& a) { return phi.eval(a); }

/// tau_L^2 + h(phi_X) tau_L - f(phi_X) = 0 with tau_L = tau^d.
struct CharPoly {
  FqPoly h;
  FqPoly f;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Solves the defining relation by linear algebra over F_q.
/// EvenDegreeExtension when d is even; InconsistentSystem if no unique solution exists.
CharPoly frobenius_charpoly(const DrinfeldModule& phi);

/// tau_L^2 + phi_h tau_L - phi_f; zero iff (h, f) is the characteristic polynomial.
OrePoly charpoly_residual(const DrinfeldModule& phi, const CharPoly& cp);
inline bool charpoly_holds(const DrinfeldModule& phi, const CharPoly& cp) {
  return charpoly_residual(phi, cp).is_zero();
}

/// c in F_q^* with (c*h, c^2*f) = (b.h, b.f), if any. Twisting a module by
/// mu in L^* rescales tau_L by an element of F_q^*, so one j-invariant
/// carries all of these characteristic polynomials; for q = 2 only c = 1 exists.
std::optional<std::uint32_t> twist_factor(const CharPoly& a, const CharPoly& b);

/// c in F_q^* such that phi satisfies the twist (c*h, c^2*f) of cp, if any.
std::optional<std::uint32_t> charpoly_twist(const DrinfeldModule& phi, const CharPoly& cp);
inline bool charpoly_matches(const DrinfeldModule& phi, const CharPoly& cp) {
  return charpoly_twist(phi, cp).has_value();
}

/// True iff p does not divide h.
bool is_ordinary(const CharPoly& cp, const FqPoly& p);

/// psi with iota * phi_X = psi_X * iota. NotSeparable if iota has zero constant
/// term; NotAnIsogeny if no such psi of rank 2 exists.
DrinfeldModule velu_codomain(const DrinfeldModule& phi, const OrePoly& iota);

}  // namespace drinact
