#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drinact/bigint.hpp"
#include "drinact/drinfeld.hpp"
#include "drinact/jacobian.hpp"

namespace drinact {

/// L = F_q[X]/(p), the characteristic polynomial Y^2 + hY - f and its curve,
/// plus a starting j-invariant.
struct Instance {
  ExtFieldPtr field;
  FqPoly p;
  FieldElement omega;
  CharPoly charpoly;
  CurvePtr curve;
  FieldElement j;
  std::optional<BigInt> order;
  std::optional<std::uint64_t> seed;

  int d() const noexcept { return field->degree(); }
  std::uint32_t q() const noexcept { return field->q(); }
  DrinfeldModule module_for(const FieldElement& jj) const { return DrinfeldModule::from_j(jj, omega); }
};

/// Checks the structural invariants (odd d >= 5, p irreducible, curve smooth,
/// h != 0 and p not dividing h, monic(f) = p) but not the charpoly relation.
Instance make_instance(const FqPoly& p, const FqPoly& h, const FqPoly& f, const FqPoly& j,
                       std::optional<BigInt> order = std::nullopt, std::optional<std::uint64_t> seed = std::nullopt);

/// CharpolyMismatch unless tau_L^2 + phi_h tau_L - phi_f = 0 for phi = from_j(j).
void check_charpoly(const Instance& inst, const FieldElement& j);

/// c with from_j-style module phi satisfying (c*h, c^2*f); then Y acts as
/// tau_L / c. For q = 2 this is always 1 and is only checked when `verify`.
/// CharpolyMismatch if phi is outside the isogeny class.
std::uint32_t twist_for(const Instance& inst, const DrinfeldModule& phi, bool verify);

struct Isogeny {
  DrinfeldModule domain;
  DrinfeldModule codomain;
  OrePoly ore;
};

/// Strict mode re-checks the charpoly relation of the input j; it defaults on below d = 50.
inline bool default_strict(const Instance& inst) { return inst.d() < 50; }

/// j' = [div] * j. ZeroJInvariant, CharpolyMismatch, InvalidMumford.
FieldElement group_action(const Instance& inst, const FieldElement& j, const MumfordDivisor& div,
                          std::optional<bool> strict = std::nullopt);

/// rgcd(phi_u, tau_L - phi_v) together with its Velu codomain.
Isogeny isogeny_from_ideal(const Instance& inst, const DrinfeldModule& phi, const MumfordDivisor& div,
                           std::optional<bool> strict = std::nullopt);

/// The isogeny psi -> phi with dual * iota = phi_a. NotRightDivisible if iota does not divide phi_a.
Isogeny dual_isogeny(const Isogeny& iota, const FqPoly& a);

/// Monic u of least degree with iota right-dividing phi_u.
FqPoly minimal_norm_poly(const DrinfeldModule& phi, const OrePoly& iota);

/// v with deg v < deg r such that iota generates <phi_r, tau_L/c - phi_v>. NoSolution otherwise.
FqPoly prime_isogeny_to_prime_ideal(const DrinfeldModule& phi, const OrePoly& iota, const FqPoly& r,
                                    std::uint32_t twist = 1);

struct IdealFactor {
  enum class Kind { Principal, Prime };
  Kind kind;
  FqPoly r;
  FqPoly v;  // zero for Principal
  unsigned multiplicity;
  friend bool operator==(const IdealFactor&, const IdealFactor&) = default;
};

struct IdealFactorization {
  std::vector<IdealFactor> factors;
};

/// Which branch the recursion took at each step.
struct IdealTrace {
  unsigned coprime = 0;    // rgcd(iota, phi_r) = 1
  unsigned principal = 0;  // phi_r right-divides iota
  unsigned prime = 0;      // proper divisor: a degree-one prime above r
};

/// Factors the ideal of iota. u must be monic with iota right-dividing phi_u.
IdealFactorization isogeny_to_ideal(const Instance& inst, const DrinfeldModule& phi, const OrePoly& iota,
                                    const FqPoly& u, IdealTrace* trace = nullptr);

MumfordDivisor ideal_class_reduce(const Instance& inst, const IdealFactorization& fac);

std::string to_string(const IdealFactorization& fac);

}  // namespace drinact
