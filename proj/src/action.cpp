#include "drinact/action.hpp"

#include <algorithm>
#include <sstream>

#include "drinact/encoding.hpp"
#include "drinact/error.hpp"
#include "drinact/linalg.hpp"

namespace drinact {

Instance make_instance(const FqPoly& p, const FqPoly& h, const FqPoly& f, const FqPoly& j,
                       std::optional<BigInt> order, std::optional<std::uint64_t> seed) {
  const int d = p.degree();
  if (d < 5 || d % 2 == 0) raise(ErrorCode::InvariantViolated, "d must be odd and at least 5");
  if (!p.is_monic() || !is_irreducible(p)) raise(ErrorCode::InvariantViolated, "p must be monic irreducible");
  if (h.is_zero()) raise(ErrorCode::ZeroH, "h must be nonzero");
  if ((h % p).is_zero()) raise(ErrorCode::InvariantViolated, "p divides h (supersingular)");
  if (!(f.monic() == p)) raise(ErrorCode::InvariantViolated, "monic(f) must equal p");
  CurvePtr curve = curve_validate(h, f);
  ExtFieldPtr L = ExtField::create(p);
  return Instance{L, p, L->generator(), CharPoly{h, f}, std::move(curve), L->element(j), std::move(order), seed};
}

void check_charpoly(const Instance& inst, const FieldElement& j) {
  if (!charpoly_holds(inst.module_for(j), inst.charpoly))
    raise(ErrorCode::CharpolyMismatch, "Frobenius does not satisfy the instance characteristic polynomial");
}

std::uint32_t twist_for(const Instance& inst, const DrinfeldModule& phi, bool verify) {
  if (inst.q() == 2 && !verify) return 1;
  auto c = charpoly_twist(phi, inst.charpoly);
  if (!c) raise(ErrorCode::CharpolyMismatch, "module is not in the isogeny class of the instance");
  return *c;
}

namespace {

void check_divisor(const Instance& inst, const MumfordDivisor& div) {
  if (!(*div.curve() == *inst.curve)) raise(ErrorCode::InvalidMumford, "divisor lives on another curve");
  try {
    mumford_validate(inst.curve, div.u(), div.v());
  } catch (const Error& e) {
    raise(ErrorCode::InvalidMumford, e.what());
  }
}

// rgcd(phi_u, tau^d - c*phi_v); the first Euclidean step reduces tau^d modulo phi_u directly.
OrePoly ideal_rgcd(const Instance& inst, const DrinfeldModule& phi, const MumfordDivisor& div, std::uint32_t twist) {
  const OrePoly ut = phi.eval(div.u());
  const OrePoly vt = phi.eval(div.v().scaled(twist));
  return rgcd(ut, tau_power_mod(static_cast<std::size_t>(inst.d()), ut) - vt);
}

}  // namespace

FieldElement group_action(const Instance& inst, const FieldElement& j, const MumfordDivisor& div,
                          std::optional<bool> strict) {
  if (j.field() != inst.field) raise(ErrorCode::MixedFields, "j from another field");
  if (j.is_zero()) raise(ErrorCode::ZeroJInvariant, "j = 0 is supersingular");
  check_divisor(inst, div);
  const DrinfeldModule phi = inst.module_for(j);
  const std::uint32_t twist = twist_for(inst, phi, strict.value_or(default_strict(inst)));
  const OrePoly iota = ideal_rgcd(inst, phi, div, twist);
  const FieldElement i0 = iota.coeff(0);
  const FieldElement i1 = iota.coeff(1);
  const FieldElement& w = inst.omega;
  const FieldElement g_hat = i0.frobenius().inverse() * (i0 + i1 * (w.frobenius() - w));
  const FieldElement delta_hat = j.inverse().frobenius(static_cast<unsigned>(iota.degree()));
  return g_hat.frobenius() * g_hat / delta_hat;
}

Isogeny isogeny_from_ideal(const Instance& inst, const DrinfeldModule& phi, const MumfordDivisor& div,
                           std::optional<bool> strict) {
  check_divisor(inst, div);
  const std::uint32_t twist = twist_for(inst, phi, strict.value_or(default_strict(inst)));
  OrePoly iota = ideal_rgcd(inst, phi, div, twist);
  DrinfeldModule psi = velu_codomain(phi, iota);
  return Isogeny{phi, std::move(psi), std::move(iota)};
}

Isogeny dual_isogeny(const Isogeny& iota, const FqPoly& a) {
  OrePoly dual = exact_right_div(iota.domain.eval(a), iota.ore);
  if (iota.ore * dual != iota.codomain.eval(a))
    raise(ErrorCode::NotAnIsogeny, "iota * dual differs from psi_a");
  return Isogeny{iota.codomain, iota.domain, std::move(dual)};
}

namespace {

FqVector flatten(const OrePoly& p, std::size_t slots, std::size_t d) {
  FqVector v(p.field()->base(), slots * d);
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) v.add_poly(k * d, c[k].value());
  return v;
}

}  // namespace

FqPoly minimal_norm_poly(const DrinfeldModule& phi, const OrePoly& iota) {
  const PrimeField& F = phi.field()->base();
  if (iota.is_zero()) raise(ErrorCode::ZeroPolynomial, "isogeny must be nonzero");
  if (iota.coeff(0).is_zero()) raise(ErrorCode::NotSeparable, "isogeny has zero constant term");
  const auto n = static_cast<std::size_t>(iota.degree());
  if (n == 0) return FqPoly::constant(F, 1);
  const auto d = static_cast<std::size_t>(phi.field()->degree());
  SpanSolver solver(F, n * d);
  const OrePoly phix = phi.phi_x();
  OrePoly rem = OrePoly::constant(phi.field()->one());
  for (std::size_t l = 0;; ++l) {
    if (l) rem = right_divmod(phix * rem, iota).second;
    if (auto c = solver.add(flatten(rem, n, d))) {
      FqPoly u = FqPoly::monomial(F, 1, l);
      for (std::size_t i = 0; i < l; ++i) u.set_coeff(i, F.sub(u.coeff(i), (*c)[i]));
      return u;
    }
  }
}

FqPoly prime_isogeny_to_prime_ideal(const DrinfeldModule& phi, const OrePoly& iota, const FqPoly& r,
                                    std::uint32_t twist) {
  const PrimeField& F = phi.field()->base();
  if (!r.is_monic() || r.degree() < 1) raise(ErrorCode::InvalidArgument, "r must be monic of positive degree");
  if (iota.degree() != r.degree()) raise(ErrorCode::NoSolution, "deg iota differs from deg r");
  if (iota.coeff(0).is_zero()) raise(ErrorCode::NotSeparable, "isogeny has zero constant term");
  const auto n = static_cast<std::size_t>(r.degree());
  const auto d = static_cast<std::size_t>(phi.field()->degree());
  SpanSolver solver(F, n * d);
  const OrePoly phix = phi.phi_x();
  OrePoly rem = OrePoly::constant(phi.field()->one());
  for (std::size_t i = 0; i < n; ++i) {
    if (i) rem = right_divmod(phix * rem, iota).second;
    solver.add(flatten(rem, n, d));
  }
  auto coeffs = solver.express(flatten(tau_power_mod(d, iota), n, d));
  if (!coeffs) raise(ErrorCode::NoSolution, "tau_L is not congruent to any phi_v modulo iota");
  return FqPoly(F, *coeffs).scaled(F.inv(twist));
}

IdealFactorization isogeny_to_ideal(const Instance& inst, const DrinfeldModule& phi0, const OrePoly& iota0,
                                    const FqPoly& u0, IdealTrace* trace) {
  if (!u0.is_monic()) raise(ErrorCode::NotMonic, "u must be monic");
  if (iota0.is_zero() || iota0.coeff(0).is_zero()) raise(ErrorCode::NotSeparable, "isogeny must be separable");
  if (!right_divmod(phi0.eval(u0), iota0).second.is_zero())
    raise(ErrorCode::NotRightDivisible, "iota does not right-divide phi_u");

  const std::uint32_t twist = twist_for(inst, phi0, false);
  IdealTrace local;
  IdealTrace& tr = trace ? *trace : local;
  std::vector<IdealFactor> raw;
  DrinfeldModule phi = phi0;
  OrePoly iota = iota0.monic();
  FqPoly u = u0;
  while (!u.is_one()) {
    const FqPoly r = smallest_prime_factor(u);
    const OrePoly phir = phi.eval(r);
    const OrePoly it = rgcd(iota, phir);
    if (it.is_one()) {
      ++tr.coprime;
      for (unsigned k = valuation(u, r); k > 0; --k) u = u / r;
    } else if (it.degree() == phir.degree()) {
      ++tr.principal;
      raw.push_back({IdealFactor::Kind::Principal, r, FqPoly(r.field()), 1});
      iota = exact_right_div(iota, phir).monic();
      u = u / r;
    } else {
      ++tr.prime;
      FqPoly v = prime_isogeny_to_prime_ideal(phi, it, r, twist);
      if (!(inst.curve->equation_at(v) % r).is_zero())
        raise(ErrorCode::NoSolution, "recovered v is not a root of the curve equation modulo r");
      DrinfeldModule next = velu_codomain(phi, it);
      raw.push_back({IdealFactor::Kind::Prime, r, std::move(v), 1});
      iota = exact_right_div(iota, it).monic();
      phi = std::move(next);
      u = u / r;
    }
  }
  if (iota.degree() != 0) raise(ErrorCode::NotRightDivisible, "isogeny left over after exhausting u");

  std::sort(raw.begin(), raw.end(), [](const IdealFactor& a, const IdealFactor& b) {
    if (!(a.r == b.r)) return factor_order_less(a.r, b.r);
    if (a.kind != b.kind) return a.kind < b.kind;
    return factor_order_less(a.v, b.v);
  });
  IdealFactorization out;
  for (auto& e : raw) {
    if (!out.factors.empty()) {
      IdealFactor& last = out.factors.back();
      if (last.kind == e.kind && last.r == e.r && last.v == e.v) {
        ++last.multiplicity;
        continue;
      }
    }
    out.factors.push_back(std::move(e));
  }
  return out;
}

MumfordDivisor ideal_class_reduce(const Instance& inst, const IdealFactorization& fac) {
  MumfordDivisor acc = MumfordDivisor::identity(inst.curve);
  for (const auto& e : fac.factors) {
    if (e.kind == IdealFactor::Kind::Principal) continue;
    const MumfordDivisor cls = ideal_to_class(inst.curve, e.r, e.v);
    acc = jac_add(acc, jac_scalar_mul(cls, BigInt(e.multiplicity)));
  }
  return acc;
}

std::string to_string(const IdealFactorization& fac) {
  std::ostringstream os;
  if (fac.factors.empty()) return "(1)";
  bool first = true;
  for (const auto& e : fac.factors) {
    if (!first) os << " * ";
    first = false;
    if (e.kind == IdealFactor::Kind::Principal)
      os << "<" << encode_poly(e.r) << ">";
    else
      os << "<" << encode_poly(e.r) << ", Y - " << encode_poly(e.v) << ">";
    if (e.multiplicity > 1) os << "^" << e.multiplicity;
  }
  return os.str();
}

}  // namespace drinact
