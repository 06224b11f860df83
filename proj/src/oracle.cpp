#include "drinact/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "drinact/encoding.hpp"
#include "drinact/error.hpp"

namespace drinact::oracle {

namespace {

std::uint64_t checked_power(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= q;
    if (r > kGuard) raise(ErrorCode::TooLarge, "enumeration domain exceeds 2^20");
  }
  return r;
}

// The n-th polynomial of degree < k in base-q digit order.
FqPoly poly_from_index(const PrimeField& F, std::uint64_t n, int k) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(k));
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(n % F.q());
    n /= F.q();
  }
  return FqPoly(F, c);
}

}  // namespace

bool element_less(const FieldElement& a, const FieldElement& b) { return factor_order_less(a.value(), b.value()); }

bool divisor_less(const MumfordDivisor& a, const MumfordDivisor& b) {
  if (!(a.u() == b.u())) return factor_order_less(a.u(), b.u());
  return factor_order_less(a.v(), b.v());
}

std::vector<MumfordDivisor> enumerate_jacobian(const CurvePtr& curve) {
  const PrimeField& F = curve->base();
  const int g = curve->genus();
  checked_power(F.q(), curve->f().degree());
  std::vector<MumfordDivisor> out;
  for (int k = 0; k <= g; ++k) {
    const std::uint64_t n = checked_power(F.q(), k);
    for (std::uint64_t iu = 0; iu < n; ++iu) {
      const FqPoly u = poly_from_index(F, iu, k) + FqPoly::monomial(F, 1, static_cast<std::size_t>(k));
      for (std::uint64_t iv = 0; iv < n; ++iv) {
        const FqPoly v = poly_from_index(F, iv, k);
        if ((v * v + curve->h() * v - curve->f()) % u == FqPoly(F)) out.push_back(mumford_validate(curve, u, v));
      }
    }
  }
  std::sort(out.begin(), out.end(), divisor_less);
  return out;
}

BigInt jacobian_order_by_points(const HyperCurve& curve) {
  const PrimeField& F = curve.base();
  const int g = curve.genus();
  checked_power(F.q(), 2 * g);
  std::vector<BigInt> s(static_cast<std::size_t>(g) + 1);
  for (int k = 1; k <= g; ++k) {
    const ExtFieldPtr E = ExtField::create(random_irreducible(F, static_cast<std::size_t>(k), std::uint64_t(k)));
    const std::uint64_t n = checked_power(F.q(), k);
    std::vector<FieldElement> elems;
    elems.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(E->element(poly_from_index(F, i, k)));
    // For each x, count y with y^2 + h(x) y - f(x) = 0 by direct scan.
    BigInt points = 1;  // the point at infinity
    for (const auto& x : elems) {
      FieldElement hx = E->zero(), fx = E->zero();
      for (int i = curve.h().degree(); i >= 0; --i) hx = hx * x + E->constant(curve.h().coeff(static_cast<std::size_t>(i)));
      for (int i = curve.f().degree(); i >= 0; --i) fx = fx * x + E->constant(curve.f().coeff(static_cast<std::size_t>(i)));
      for (const auto& y : elems)
        if ((y * y + hx * y - fx).is_zero()) ++points;
    }
    s[static_cast<std::size_t>(k)] = BigInt(n) + 1 - points;
  }
  // L(T) = sum a_i T^i with k a_k = -sum_{i=1}^{k} s_i a_{k-i}; a_{g+i} = q^i a_{g-i}.
  std::vector<BigInt> a(2 * static_cast<std::size_t>(g) + 1);
  a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc -= s[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    if (acc % k != 0) raise(ErrorCode::InconsistentSystem, "point counts are not those of a curve");
    a[static_cast<std::size_t>(k)] = acc / k;
  }
  BigInt qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= F.q();
    a[static_cast<std::size_t>(g + i)] = qi * a[static_cast<std::size_t>(g - i)];
  }
  BigInt total = 0;
  for (const auto& x : a) total += x;
  return total;
}

std::vector<FieldElement> enumerate_isogeny_class(const Instance& inst) {
  const PrimeField& F = inst.field->base();
  const std::uint64_t n = checked_power(F.q(), inst.d());
  std::vector<FieldElement> out;
  for (std::uint64_t i = 1; i < n; ++i) {
    const FieldElement j = inst.field->element(poly_from_index(F, i, inst.d()));
    if (twist_factor(inst.charpoly, frobenius_charpoly(inst.module_for(j)))) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

OrbitReport orbit_check(const Instance& inst, std::uint64_t seed) {
  OrbitReport rep;
  const auto jac = enumerate_jacobian(inst.curve);
  const auto cls = enumerate_isogeny_class(inst);
  rep.jacobian_size = jac.size();
  rep.class_size = cls.size();

  std::vector<FieldElement> image;
  image.reserve(jac.size());
  for (const auto& c : jac) image.push_back(group_action(inst, inst.j, c, true));
  std::vector<FieldElement> sorted = image;
  std::sort(sorted.begin(), sorted.end(), element_less);
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.injective = distinct;
  rep.surjective = distinct && sorted == cls;

  auto compat = [&](std::size_t a, std::size_t b) {
    ++rep.compat_pairs;
    const FieldElement lhs = group_action(inst, inst.j, jac_add(jac[a], jac[b]), true);
    const FieldElement rhs = group_action(inst, image[b], jac[a], true);
    if (!(lhs == rhs)) ++rep.compat_failures;
  };
  if (jac.size() <= 64) {
    for (std::size_t a = 0; a < jac.size(); ++a)
      for (std::size_t b = 0; b < jac.size(); ++b) compat(a, b);
  } else {
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) compat(rng.below(jac.size()), rng.below(jac.size()));
  }
  return rep;
}

std::string OrbitReport::to_string() const {
  std::ostringstream os;
  os << "jacobian_size=" << jacobian_size << "\n"
     << "class_size=" << class_size << "\n"
     << "injective=" << (injective ? "true" : "false") << "\n"
     << "surjective=" << (surjective ? "true" : "false") << "\n"
     << "compat_pairs=" << compat_pairs << "\n"
     << "compat_failures=" << compat_failures << "\n"
     << "verdict=" << (ok() ? "bijective" : "FAIL") << "\n";
  return os.str();
}

}  // namespace drinact::oracle
