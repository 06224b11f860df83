#include "doctest.h"
#include "support.hpp"

#include "drinact/error.hpp"
#include "drinact/oracle.hpp"
#include "drinact/params.hpp"

using namespace drinact;
using support::poly2;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

const std::vector<Instance>& toys() {
  static const std::vector<Instance> v = {gen_instance(2, 5, 1), gen_instance(2, 7, 1), gen_instance(3, 5, 1),
                                          gen_instance(2, 11, 1)};
  return v;
}

// A random prime divisor of degree at most k, or nullopt if none turned up.
std::optional<MumfordDivisor> some_prime(const Instance& inst, std::size_t k, Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    try {
      return random_prime_divisor(inst.curve, 1 + rng.below(k), rng);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("instance invariants") {
  const Instance t = toys()[0];
  const PrimeField F(2);
  CHECK(code_of([&] { make_instance(poly2({0, 1, 6}), t.charpoly.h, t.charpoly.f, t.j.value()); }) ==
        ErrorCode::InvariantViolated);
  CHECK(code_of([&] { make_instance(t.p, FqPoly(F), t.charpoly.f, t.j.value()); }) == ErrorCode::ZeroH);
  CHECK_THROWS_AS(make_instance(t.p, t.p * t.charpoly.h, t.charpoly.f, t.j.value()), Error);
  CHECK(code_of([&] { make_instance(t.p, t.charpoly.h, t.charpoly.f + poly2({0}), t.j.value()); }) ==
        ErrorCode::InvariantViolated);
  const Instance same = make_instance(t.p, t.charpoly.h, t.charpoly.f, t.j.value());
  CHECK(same.j.value() == t.j.value());
  CHECK(same.curve->genus() == 2);
}

TEST_CASE("identity class") {
  for (const auto& inst : toys()) {
    const auto O = MumfordDivisor::identity(inst.curve);
    CHECK(group_action(inst, inst.j, O) == inst.j);
    const auto iso = isogeny_from_ideal(inst, inst.module_for(inst.j), O);
    CHECK(iso.ore.is_one());
    CHECK(iso.codomain == iso.domain);
    CHECK(minimal_norm_poly(iso.domain, iso.ore).is_one());
    CHECK(isogeny_to_ideal(inst, iso.domain, iso.ore, FqPoly::constant(inst.field->base(), 1)).factors.empty());
    const FqPoly a = FqPoly::x(inst.field->base()) + FqPoly::constant(inst.field->base(), 1);
    CHECK(dual_isogeny(iso, a).ore == iso.domain.eval(a));
  }
}

TEST_CASE("action errors") {
  const Instance& inst = toys()[0];
  const auto O = MumfordDivisor::identity(inst.curve);
  CHECK(code_of([&] { group_action(inst, inst.field->zero(), O); }) == ErrorCode::ZeroJInvariant);
  const auto cls = oracle::enumerate_isogeny_class(inst);
  for (const auto& x : support::all_elements(inst.field)) {
    if (x.is_zero() || std::binary_search(cls.begin(), cls.end(), x, oracle::element_less)) continue;
    CHECK(code_of([&] { group_action(inst, x, O, true); }) == ErrorCode::CharpolyMismatch);
    break;
  }
  const Instance& other = toys()[1];
  CHECK(code_of([&] { group_action(inst, inst.j, MumfordDivisor::identity(other.curve)); }) ==
        ErrorCode::InvalidMumford);
}

TEST_CASE("isogenies from ideals") {
  Rng rng(9);
  for (const auto& inst : toys()) {
    const auto phi = inst.module_for(inst.j);
    const std::uint32_t c = twist_for(inst, phi, true);
    for (int trial = 0; trial < 25; ++trial) {
      const auto div = random_divisor(inst.curve, rng);
      const auto iso = isogeny_from_ideal(inst, phi, div);
      CHECK(iso.ore.degree() == div.u().degree());
      CHECK(!iso.ore.coeff(0).is_zero());
      CHECK(charpoly_matches(iso.codomain, inst.charpoly));
      CHECK(iso.codomain.j_invariant() == group_action(inst, inst.j, div));
      for (int k = 0; k < 10; ++k) {
        const FqPoly a = random_poly(inst.field->base(), 1 + rng.below(4), rng);
        CHECK(iso.ore * phi.eval(a) == iso.codomain.eval(a) * iso.ore);
      }
      // Both composition identities of the dual, taken with respect to u.
      const auto dual = dual_isogeny(iso, div.u());
      CHECK(dual.ore * iso.ore == phi.eval(div.u()));
      CHECK(iso.ore * dual.ore == iso.codomain.eval(div.u()));
      const auto back = dual_isogeny(dual, div.u());
      CHECK(back.ore * dual.ore == iso.codomain.eval(div.u()));
      CHECK(back.domain == phi);
      CHECK(back.codomain == iso.codomain);
      CHECK(back.ore == iso.ore);
      CHECK(minimal_norm_poly(phi, iso.ore) == div.u());
    }
    // Prime ideals: the v-part is recovered exactly.
    for (int trial = 0; trial < 10; ++trial) {
      const auto Pp = some_prime(inst, static_cast<std::size_t>(inst.curve->genus()), rng);
      REQUIRE(Pp);
      const auto& P = *Pp;
      const auto iso = isogeny_from_ideal(inst, phi, P);
      CHECK(prime_isogeny_to_prime_ideal(phi, iso.ore, P.u(), c) == P.v());
    }
  }
}

TEST_CASE("ideal factorization branches") {
  Rng rng(10);
  const Instance& inst = toys()[3];
  const auto phi = inst.module_for(inst.j);
  const PrimeField F = inst.field->base();
  // phi_r itself is the principal ideal <r>.
  const FqPoly r = random_irreducible(F, 2, rng);
  IdealTrace trace;
  const auto fac = isogeny_to_ideal(inst, phi, phi.eval(r).monic(), r, &trace);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].kind == IdealFactor::Kind::Principal);
  CHECK(fac.factors[0].r == r);
  CHECK(trace.principal == 1);
  CHECK(ideal_class_reduce(inst, fac).is_identity());
  CHECK(ideal_class_reduce(inst, IdealFactorization{}).is_identity());

  // Conjugate primes multiply to a principal ideal.
  for (int i = 0; i < 10; ++i) {
    const auto Pp = some_prime(inst, 3, rng);
    REQUIRE(Pp);
    const auto& P = *Pp;
    const FqPoly vbar = (-P.v() - inst.curve->h()) % P.u();
    IdealFactorization pair{{{IdealFactor::Kind::Prime, P.u(), P.v(), 1}, {IdealFactor::Kind::Prime, P.u(), vbar, 1}}};
    CHECK(ideal_class_reduce(inst, pair).is_identity());
    IdealFactorization single{{{IdealFactor::Kind::Prime, P.u(), P.v(), 2}}};
    CHECK(ideal_class_reduce(inst, single) == jac_add(P, P));
  }

  // A multiple u * s with s coprime to the norm exercises the coprime branch.
  const auto divp = some_prime(inst, 2, rng);
  REQUIRE(divp);
  const auto& div = *divp;
  const auto iso = isogeny_from_ideal(inst, phi, div);
  FqPoly s = random_irreducible(F, 1, rng);
  while (s == div.u()) s = random_irreducible(F, 1, rng);
  IdealTrace t2;
  const auto fac2 = isogeny_to_ideal(inst, phi, iso.ore, div.u() * s, &t2);
  CHECK(t2.coprime >= 1);
  CHECK(ideal_class_reduce(inst, fac2) == div);
}

TEST_CASE("compatibility with the group law on a toy instance") {
  const Instance& inst = toys()[0];
  const auto all = oracle::enumerate_jacobian(inst.curve);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto lhs = group_action(inst, inst.j, jac_add(a, b));
      const auto rhs = group_action(inst, group_action(inst, inst.j, b), a);
      REQUIRE(lhs == rhs);
    }
}
