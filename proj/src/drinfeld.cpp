#include "drinact/drinfeld.hpp"

#include "drinact/error.hpp"
#include "drinact/linalg.hpp"

namespace drinact {

DrinfeldModule::DrinfeldModule(FieldElement delta, FieldElement g, FieldElement omega)
    : delta_(std::move(delta)), g_(std::move(g)), omega_(std::move(omega)) {
  if (delta_.field() != g_.field() || delta_.field() != omega_.field())
    raise(ErrorCode::MixedFields, "Drinfeld module coefficients from different fields");
  if (delta_.is_zero()) raise(ErrorCode::InvalidArgument, "leading coefficient of phi_X must be nonzero");
  const auto d = static_cast<std::size_t>(field()->degree());
  auto tw = std::make_shared<std::vector<Twist>>();
  tw->reserve(d);
  tw->push_back({delta_, g_, omega_});
  for (std::size_t i = 1; i < d; ++i) {
    const Twist& prev = tw->back();
    tw->push_back({prev.delta.frobenius(), prev.g.frobenius(), prev.omega.frobenius()});
  }
  twists_ = std::move(tw);
}

DrinfeldModule DrinfeldModule::from_j(const FieldElement& j, const FieldElement& omega) {
  const ExtFieldPtr& L = omega.field();
  if (j.is_zero()) return DrinfeldModule(L->one(), L->zero(), omega);
  return DrinfeldModule(j.inverse(), L->one(), omega);
}

OrePoly DrinfeldModule::phi_x() const { return OrePoly(field(), {omega_, g_, delta_}); }

FieldElement DrinfeldModule::j_invariant() const {
  return g_.frobenius() * g_ / delta_;
}

OrePoly DrinfeldModule::right_mul_phi_x(const OrePoly& p) const {
  const ExtFieldPtr& L = field();
  if (p.is_zero()) return p;
  const auto& c = p.coefficients();
  const std::size_t n = c.size();
  const std::size_t d = twists_->size();
  std::vector<FieldElement> out(n + 2, L->zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    const Twist& t = (*twists_)[i % d];
    out[i] += c[i] * t.omega;
    if (!t.g.is_zero()) out[i + 1] += c[i] * t.g;
    out[i + 2] += c[i] * t.delta;
  }
  return OrePoly(L, std::move(out));
}

OrePoly DrinfeldModule::eval(const FqPoly& a) const {
  const ExtFieldPtr& L = field();
  if (a.field() != L->base()) raise(ErrorCode::MixedFields, "polynomial over another prime field");
  OrePoly acc(L);
  for (int i = a.degree(); i >= 0; --i) {
    acc = right_mul_phi_x(acc);
    const std::uint32_t c = a.coeff(static_cast<std::size_t>(i));
    if (c) acc += OrePoly::constant(L->constant(c));
  }
  return acc;
}

namespace {

// Flattens the coefficients of p (optionally negated) into v, one block of
// d entries per power of tau.
void flatten_into(FqVector& v, const OrePoly& p, std::size_t shift, std::size_t d, bool negate) {
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    v.add_poly((k + shift) * d, negate ? -c[k].value() : c[k].value());
  }
}

}  // namespace

CharPoly frobenius_charpoly(const DrinfeldModule& phi) {
  const ExtFieldPtr& L = phi.field();
  const PrimeField& F = L->base();
  const auto d = static_cast<std::size_t>(L->degree());
  if (d % 2 == 0) raise(ErrorCode::EvenDegreeExtension, "characteristic polynomial needs odd [L:F_q]");
  const std::size_t nh = (d - 1) / 2 + 1;
  const std::size_t dim = (2 * d + 1) * d;

  // Unknowns in insertion order; slot[k] says whether column k is h_i or f_i.
  struct Slot {
    bool is_h;
    std::size_t index;
  };
  std::vector<Slot> slots;
  SpanSolver solver(F, dim);
  OrePoly power = OrePoly::constant(L->one());
  for (std::size_t j = 0; j <= d; ++j) {
    if (j) power = phi.right_mul_phi_x(power);
    if (j < nh) {
      FqVector col(F, dim);
      flatten_into(col, power, d, d, false);
      if (solver.add(col)) raise(ErrorCode::InconsistentSystem, "dependent columns in the charpoly system");
      slots.push_back({true, j});
    }
    FqVector col(F, dim);
    flatten_into(col, power, 0, d, true);
    if (solver.add(col)) raise(ErrorCode::InconsistentSystem, "dependent columns in the charpoly system");
    slots.push_back({false, j});
  }
  FqVector target(F, dim);
  target.set(2 * d * d, F.neg(1));
  auto sol = solver.express(target);
  if (!sol) raise(ErrorCode::InconsistentSystem, "charpoly system has no solution");

  std::vector<std::uint32_t> h(nh, 0), f(d + 1, 0);
  for (std::size_t k = 0; k < slots.size(); ++k) (slots[k].is_h ? h : f)[slots[k].index] = (*sol)[k];
  CharPoly cp{FqPoly(F, h), FqPoly(F, f)};
  if (cp.f.degree() != static_cast<int>(d)) raise(ErrorCode::InconsistentSystem, "charpoly f has the wrong degree");
  return cp;
}

OrePoly charpoly_residual(const DrinfeldModule& phi, const CharPoly& cp) {
  const ExtFieldPtr& L = phi.field();
  const auto d = static_cast<std::size_t>(L->degree());
  OrePoly r = OrePoly::tau_power(L, 2 * d);
  r += phi.eval(cp.h).times_tau(d);
  r -= phi.eval(cp.f);
  return r;
}

std::optional<std::uint32_t> twist_factor(const CharPoly& a, const CharPoly& b) {
  const PrimeField& F = a.f.field();
  if (a.f.is_zero() || b.f.is_zero()) return std::nullopt;
  const std::uint32_t c2 = F.mul(b.f.leading(), F.inv(a.f.leading()));
  for (std::uint32_t c = 1; c < F.q(); ++c)
    if (F.mul(c, c) == c2 && a.h.scaled(c) == b.h && a.f.scaled(c2) == b.f) return c;
  return std::nullopt;
}

std::optional<std::uint32_t> charpoly_twist(const DrinfeldModule& phi, const CharPoly& cp) {
  const ExtFieldPtr& L = phi.field();
  const PrimeField& F = L->base();
  const auto d = static_cast<std::size_t>(L->degree());
  const OrePoly hf = phi.eval(cp.h).times_tau(d);
  const OrePoly ff = phi.eval(cp.f);
  if (ff.degree() != static_cast<int>(2 * d) || !ff.leading().in_base_field()) return std::nullopt;
  // The tau^(2d) coefficient forces c^2 * lead(phi_f) = 1.
  const std::uint32_t c2 = F.inv(ff.leading().coeff(0));
  for (std::uint32_t c = 1; c < F.q(); ++c) {
    if (F.mul(c, c) != c2) continue;
    OrePoly r = OrePoly::tau_power(L, 2 * d);
    r += hf.left_scaled(L->constant(c));
    r -= ff.left_scaled(L->constant(c2));
    if (r.is_zero()) return c;
  }
  return std::nullopt;
}

bool is_ordinary(const CharPoly& cp, const FqPoly& p) { return !(cp.h % p).is_zero(); }

DrinfeldModule velu_codomain(const DrinfeldModule& phi, const OrePoly& iota) {
  if (iota.is_zero()) raise(ErrorCode::ZeroPolynomial, "isogeny must be nonzero");
  if (iota.coeff(0).is_zero()) raise(ErrorCode::NotSeparable, "isogeny has zero constant term");
  const ExtFieldPtr& L = phi.field();
  const FieldElement lambda[3] = {phi.omega(), phi.g(), phi.delta()};
  const FieldElement inv0 = iota.coeff(0).inverse();
  FieldElement mu[3] = {L->zero(), L->zero(), L->zero()};
  for (unsigned i = 0; i < 3; ++i) {
    FieldElement acc = L->zero();
    for (unsigned j = 0; j <= i; ++j) {
      const FieldElement ij = iota.coeff(j);
      if (!ij.is_zero()) acc += ij * lambda[i - j].frobenius(j);
    }
    for (unsigned j = 0; j < i; ++j) {
      const FieldElement ii = iota.coeff(i - j);
      if (!ii.is_zero()) acc -= mu[j] * ii.frobenius(j);
    }
    mu[i] = acc * inv0.frobenius(i);
  }
  if (mu[2].is_zero()) raise(ErrorCode::NotAnIsogeny, "codomain would not have rank 2");
  DrinfeldModule psi(mu[2], mu[1], mu[0]);
  if (iota * phi.phi_x() != psi.phi_x() * iota)
    raise(ErrorCode::NotAnIsogeny, "iota * phi_X != psi_X * iota");
  return psi;
}

}  // namespace drinact
