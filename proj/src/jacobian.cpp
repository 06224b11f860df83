#include "drinact/jacobian.hpp"

#include "drinact/error.hpp"
#include "drinact/ext_field.hpp"

namespace drinact {

FqPoly HyperCurve::equation_at(const FqPoly& v) const { return v * v + h_ * v - f_; }

CurvePtr curve_validate(const FqPoly& h, const FqPoly& f) {
  if (!(h.field() == f.field())) raise(ErrorCode::MixedFields, "h and f over different prime fields");
  if (h.is_zero()) raise(ErrorCode::ZeroH, "h must be nonzero");
  const int df = f.degree();
  if (df < 5 || df % 2 == 0) raise(ErrorCode::DegreeConstraintViolated, "deg f must be odd and at least 5");
  if (h.degree() > (df - 1) / 2) raise(ErrorCode::DegreeConstraintViolated, "deg h exceeds the genus");
  if (h.field().is_binary()) {
    const FqPoly dh = h.derivative(), df1 = f.derivative();
    if (!gcd(h, df1 * df1 + f * dh * dh).is_one()) raise(ErrorCode::SingularCurve, "affine singular point");
  } else {
    const FqPoly disc = h * h + f.scaled(4);
    if (!gcd(disc, disc.derivative()).is_one()) raise(ErrorCode::SingularCurve, "affine singular point");
  }
  return CurvePtr(new HyperCurve(h, f));
}

MumfordDivisor MumfordDivisor::identity(CurvePtr curve) {
  const PrimeField F = curve->base();
  return MumfordDivisor(std::move(curve), FqPoly::constant(F, 1), FqPoly(F));
}

MumfordDivisor make_reduced(const CurvePtr& curve, FqPoly u, FqPoly v) {
  return MumfordDivisor(curve, std::move(u), std::move(v));
}

MumfordDivisor mumford_validate(const CurvePtr& curve, const FqPoly& u, const FqPoly& v) {
  if (!(u.field() == curve->base()) || !(v.field() == curve->base()))
    raise(ErrorCode::MixedFields, "Mumford coordinates over another prime field");
  if (!u.is_monic()) raise(ErrorCode::NotMonic, "u must be monic");
  if (u.degree() > curve->genus()) raise(ErrorCode::DegreeTooLarge, "deg u exceeds the genus");
  FqPoly vr = v % u;
  if (!(curve->equation_at(vr) % u).is_zero()) raise(ErrorCode::DivisibilityFails, "u does not divide v^2 + hv - f");
  return make_reduced(curve, u, std::move(vr));
}

namespace {

void check_same(const MumfordDivisor& a, const MumfordDivisor& b) {
  if (a.curve() != b.curve() && !(*a.curve() == *b.curve()))
    raise(ErrorCode::MixedCurves, "divisors on different curves");
}

// Cantor reduction of a semi-reduced pair; u need not be monic.
MumfordDivisor reduce_pair(const CurvePtr& c, FqPoly u, FqPoly v) {
  const int g = c->genus();
  v = v % u;
  while (u.degree() > g) {
    FqPoly un = (c->f() - v * c->h() - v * v) / u;
    FqPoly vn = (-c->h() - v) % un;
    u = std::move(un);
    v = std::move(vn);
  }
  return make_reduced(c, u.monic(), std::move(v));
}

}  // namespace

MumfordDivisor jac_add(const MumfordDivisor& a, const MumfordDivisor& b) {
  check_same(a, b);
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  const CurvePtr& c = a.curve();
  const FqPoly &u1 = a.u(), &v1 = a.v(), &u2 = b.u(), &v2 = b.v();
  const Xgcd x1 = xgcd(u1, u2);  // d1 = e1 u1 + e2 u2
  const Xgcd x2 = xgcd(x1.g, v1 + v2 + c->h());  // d = c1 d1 + c2 (v1 + v2 + h)
  const FqPoly& d = x2.g;
  const FqPoly s1 = x2.s * x1.s, s2 = x2.s * x1.t, s3 = x2.t;
  const FqPoly u = (u1 * u2) / (d * d);
  const FqPoly num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + c->f());
  FqPoly v = (num / d) % u;
  return reduce_pair(c, u, std::move(v));
}

MumfordDivisor jac_neg(const MumfordDivisor& a) {
  if (a.is_identity()) return a;
  return make_reduced(a.curve(), a.u(), (-a.v() - a.curve()->h()) % a.u());
}

MumfordDivisor jac_scalar_mul(const MumfordDivisor& a, const BigInt& n) {
  if (n < 0) return jac_scalar_mul(jac_neg(a), -n);
  MumfordDivisor acc = MumfordDivisor::identity(a.curve());
  for (std::size_t i = n == 0 ? 0 : boost::multiprecision::msb(n) + 1; i-- > 0;) {
    acc = jac_add(acc, acc);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) acc = jac_add(acc, a);
  }
  return acc;
}

MumfordDivisor ideal_to_class(const CurvePtr& curve, const FqPoly& r, const FqPoly& v) {
  if (!r.is_monic()) raise(ErrorCode::NotMonic, "r must be monic");
  const FqPoly vr = v % r;
  if (!(curve->equation_at(vr) % r).is_zero()) raise(ErrorCode::DivisibilityFails, "r does not divide v^2 + hv - f");
  if (r.is_one()) return MumfordDivisor::identity(curve);
  return reduce_pair(curve, r, vr);
}

namespace {

// Tonelli-Shanks in E; x must be a nonzero square.
FieldElement sqrt_odd(const FieldElement& x, Rng& rng) {
  const ExtFieldPtr& E = x.field();
  const BigInt order = boost::multiprecision::pow(BigInt(E->q()), static_cast<unsigned>(E->degree())) - 1;
  BigInt Q = order;
  unsigned S = 0;
  while (!boost::multiprecision::bit_test(Q, 0)) {
    Q >>= 1;
    ++S;
  }
  FieldElement z = E->one();
  do {
    z = E->random_nonzero(rng);
  } while (z.pow(order / 2).is_one());
  unsigned M = S;
  FieldElement c = z.pow(Q);
  FieldElement t = x.pow(Q);
  FieldElement R = x.pow((Q + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 0;
    FieldElement t2 = t;
    while (!t2.is_one()) {
      t2 = t2.square();
      ++i;
    }
    FieldElement b = c;
    for (unsigned k = 0; k + i + 1 < M; ++k) b = b.square();
    M = i;
    c = b.square();
    t = t * c;
    R = R * b;
  }
  return R;
}

FieldElement trace_f2(const FieldElement& c) {
  FieldElement acc = c, cur = c;
  for (int i = 1; i < c.field()->degree(); ++i) {
    cur = cur.square();
    acc += cur;
  }
  return acc;
}

// A root z of z^2 + z = c in characteristic 2, given Tr(c) = 0.
FieldElement artin_schreier_root(const FieldElement& c, Rng& rng) {
  const ExtFieldPtr& E = c.field();
  const int k = E->degree();
  if (k % 2 == 1) {
    // Half-trace: sum of c^(2^(2i)) for 0 <= i <= (k-1)/2.
    FieldElement acc = c, cur = c;
    for (int i = 1; i <= (k - 1) / 2; ++i) {
      cur = cur.square().square();
      acc += cur;
    }
    return acc;
  }
  FieldElement t = E->zero();
  do {
    t = E->random(rng);
  } while (!trace_f2(t).is_one());
  // z = sum_{i=0}^{k-2} (sum_{j=i+1}^{k-1} t^(2^j)) c^(2^i).
  std::vector<FieldElement> tp(static_cast<std::size_t>(k), t), cp(static_cast<std::size_t>(k), c);
  for (std::size_t i = 1; i < tp.size(); ++i) {
    tp[i] = tp[i - 1].square();
    cp[i] = cp[i - 1].square();
  }
  FieldElement z = E->zero(), suffix = E->zero();
  for (std::size_t i = tp.size() - 1; i-- > 0;) {
    suffix += tp[i + 1];
    z += suffix * cp[i];
  }
  return z;
}

}  // namespace

std::vector<FqPoly> prime_roots(const HyperCurve& curve, const FqPoly& r, Rng& rng) {
  const ExtFieldPtr E = ExtField::create(r);
  const FieldElement h = E->element(curve.h());
  const FieldElement f = E->element(curve.f());
  if (E->q() == 2) {
    if (h.is_zero()) return {f.frobenius(static_cast<unsigned>(E->degree() - 1)).value()};
    const FieldElement c = f / h.square();
    if (!trace_f2(c).is_zero()) return {};
    const FieldElement y = h * artin_schreier_root(c, rng);
    std::vector<FqPoly> out{y.value(), (y + h).value()};
    std::sort(out.begin(), out.end(), factor_order_less);
    return out;
  }
  const FieldElement disc = h.square() + f.scaled(4);
  const FieldElement half = E->constant(E->base().inv(2));
  if (disc.is_zero()) return {(-h * half).value()};
  const BigInt order = boost::multiprecision::pow(BigInt(E->q()), static_cast<unsigned>(E->degree())) - 1;
  if (!disc.pow(order / 2).is_one()) return {};
  const FieldElement s = sqrt_odd(disc, rng);
  std::vector<FqPoly> out{((s - h) * half).value(), ((-s - h) * half).value()};
  std::sort(out.begin(), out.end(), factor_order_less);
  return out;
}

namespace {

std::optional<MumfordDivisor> try_prime_divisor(const CurvePtr& curve, std::size_t k, Rng& rng, std::size_t attempts) {
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const FqPoly r = random_irreducible(curve->base(), k, rng);
    const auto roots = prime_roots(*curve, r, rng);
    if (roots.empty()) continue;
    return make_reduced(curve, r, roots[rng.below(roots.size())]);
  }
  return std::nullopt;
}

}  // namespace

MumfordDivisor random_prime_divisor(const CurvePtr& curve, std::size_t k, Rng& rng) {
  if (k == 0 || static_cast<int>(k) > curve->genus())
    raise(ErrorCode::InvalidArgument, "prime divisor degree must be in [1, genus]");
  if (auto div = try_prime_divisor(curve, k, rng, 100 * k + 100)) return *div;
  raise(ErrorCode::GenerationFailed, "no split or ramified prime of the requested degree found");
}

MumfordDivisor random_divisor(const CurvePtr& curve, Rng& rng) {
  MumfordDivisor acc = MumfordDivisor::identity(curve);
  const std::size_t parts = 1 + rng.below(3);
  const auto g = static_cast<std::uint64_t>(curve->genus());
  for (std::size_t i = 0; i < parts; ++i) {
    // Small degrees may have only inert primes, so retry with fresh degrees.
    for (int tries = 0; tries < 50; ++tries)
      if (auto div = try_prime_divisor(curve, 1 + rng.below(g), rng, 20)) {
        acc = jac_add(acc, *div);
        break;
      }
  }
  return acc;
}

}  // namespace drinact
