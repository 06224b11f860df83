// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "drinact/encoding.hpp"
#include "drinact/error.hpp"
#include "drinact/oracle.hpp"
#include "drinact/params.hpp"
#include "support.hpp"

using namespace drinact;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock budgets in seconds, single-threaded.
constexpr double kReferenceVerifyBudget = 300;
constexpr double kReferenceOrderBudget = 600;
constexpr double kReferenceActBudget = 600;
constexpr double kOrbitBudget = 60;
constexpr double kAxiomsBudget = 120;
constexpr double kRoundTripBudget = 120;
constexpr double kVeluBudget = 120;
constexpr double kAlgebraBudget = 60;

constexpr int kOrderDivisors = 20;
constexpr int kActDegree = 35;
constexpr int kRandomPairs = 200;
constexpr int kRoundTripPerInstance = 30;
constexpr int kVeluSamples = 10;
constexpr int kAlgebraCases = 1000;

const char* const kReferenceFixture = DRINACT_FIXTURES "/paper_521.json";

int failures = 0;

// Runs `body`, which returns true on success and may append details, and
// prints a single verdict line.
void criterion(const std::string& name, double budget, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  const auto t0 = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > budget) {
    ok = false;
    detail << " over budget";
  }
  failures += !ok;
  std::printf("%s  %-28s %7.2fs / %4.0fs %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, budget, detail.str().c_str());
  std::fflush(stdout);
}

Instance instance_with_ramified_prime(std::uint32_t q, int d) {
  for (std::uint64_t s = 1;; ++s) {
    Instance inst = gen_instance(q, d, s);
    if (inst.charpoly.h.degree() >= 1) return inst;
  }
}

// Prime divisor of degree at most k, retrying over degrees where no split
// or ramified prime was found.
MumfordDivisor some_prime(const CurvePtr& curve, std::size_t k, Rng& rng) {
  for (;;) {
    try {
      return random_prime_divisor(curve, 1 + rng.below(k), rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenerationFailed) throw;
    }
  }
}

bool velu_commutes(const Isogeny& iso, Rng& rng, int max_deg) {
  const PrimeField F = iso.domain.field()->base();
  for (int k = 0; k < kVeluSamples; ++k) {
    const FqPoly a = random_poly(F, 1 + rng.below(static_cast<std::uint64_t>(max_deg) + 1), rng);
    if (!(iso.ore * iso.domain.eval(a) == iso.codomain.eval(a) * iso.ore)) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion("d=521 instance verification", kReferenceVerifyBudget, [](std::ostringstream& out) {
    const Instance inst = read_instance(kReferenceFixture);
    const auto phi = inst.module_for(inst.j);
    const bool residual = charpoly_residual(phi, inst.charpoly).is_zero();
    const bool genus = inst.curve->genus() == 260;
    const bool modulus = inst.p == support::poly2({0, 32, 521}) && inst.charpoly.f == inst.p;
    const CharPoly solved = frobenius_charpoly(phi);
    const bool solve = solved == inst.charpoly;
    out << "residual_zero=" << residual << " genus=" << inst.curve->genus() << " solve_matches=" << solve;
    return residual && genus && modulus && solve;
  });

  criterion("d=521 group order", kReferenceOrderBudget, [](std::ostringstream& out) {
    const Instance inst = read_instance(kReferenceFixture);
    Rng rng(2024);
    int killed = 0;
    for (int i = 0; i < kOrderDivisors; ++i) {
      const auto D = random_divisor(inst.curve, rng);
      killed += jac_scalar_mul(D, *inst.order).is_identity();
    }
    out << "annihilated=" << killed << "/" << kOrderDivisors;
    return killed == kOrderDivisors;
  });

  criterion("d=521 action", kReferenceActBudget, [](std::ostringstream& out) {
    const Instance inst = read_instance(kReferenceFixture);
    Rng rng(35);
    const auto P = random_prime_divisor(inst.curve, kActDegree, rng);
    const bool irreducible = is_irreducible(P.u()) && P.u().degree() == kActDegree;
    const auto t0 = Clock::now();
    const FieldElement j2 = group_action(inst, inst.j, P, false);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const bool relation = charpoly_holds(inst.module_for(j2), inst.charpoly);
    out << "deg_u=" << P.u().degree() << " action_ms=" << ms << " charpoly_exact=" << relation;
    return irreducible && relation && !(j2 == inst.j);
  });

  criterion("simply transitive orbit", kOrbitBudget, [](std::ostringstream& out) {
    bool ok = true;
    for (auto [q, d] : {std::pair{2u, 5}, std::pair{2u, 7}, std::pair{3u, 5}}) {
      const Instance inst = gen_instance(q, d, 1);
      const auto rep = oracle::orbit_check(inst, 1);
      const bool sizes = rep.jacobian_size == oracle::enumerate_isogeny_class(inst).size() &&
                         BigInt(rep.jacobian_size) == oracle::jacobian_order_by_points(*inst.curve);
      out << " (" << q << "," << d << "):" << rep.jacobian_size << "/" << rep.class_size;
      ok = ok && rep.injective && rep.surjective && sizes;
    }
    return ok;
  });

  criterion("group action axioms", kAxiomsBudget, [](std::ostringstream& out) {
    std::size_t pairs = 0, bad = 0;
    {
      const Instance inst = gen_instance(3, 5, 1);
      const auto all = oracle::enumerate_jacobian(inst.curve);
      for (const auto& j : oracle::enumerate_isogeny_class(inst)) {
        bad += !(group_action(inst, j, MumfordDivisor::identity(inst.curve)) == j);
      }
      for (const auto& a : all)
        for (const auto& b : all) {
          ++pairs;
          bad += !(group_action(inst, inst.j, jac_add(a, b)) == group_action(inst, group_action(inst, inst.j, b), a));
        }
    }
    {
      const Instance inst = gen_instance(2, 13, 1);
      Rng rng(13);
      bad += !(group_action(inst, inst.j, MumfordDivisor::identity(inst.curve)) == inst.j);
      for (int i = 0; i < kRandomPairs; ++i) {
        const auto a = random_divisor(inst.curve, rng), b = random_divisor(inst.curve, rng);
        ++pairs;
        bad += !(group_action(inst, inst.j, jac_add(a, b)) == group_action(inst, group_action(inst, inst.j, b), a));
      }
    }
    out << "pairs=" << pairs << " failures=" << bad;
    return bad == 0;
  });

  // Isogenies built during the round trips, reused for the commutation check.
  std::vector<Isogeny> built;

  criterion("inverse round trip", kRoundTripBudget, [&built](std::ostringstream& out) {
    std::size_t trials = 0, passed = 0, split = 0, inert = 0, ramified = 0, repeated = 0;
    IdealTrace trace;
    for (auto [q, d] : {std::pair{2u, 7}, std::pair{2u, 11}, std::pair{2u, 13}}) {
      const Instance inst = instance_with_ramified_prime(q, d);
      const auto& C = inst.curve;
      const int g = C->genus();
      const auto phi = inst.module_for(inst.j);
      const FqPoly ram = factor(C->h()).factors.front().first;
      Rng rng(static_cast<std::uint64_t>(d));
      for (int t = 0; t < kRoundTripPerInstance; ++t) {
        // Rotate through the shapes of starting ideal.
        MumfordDivisor c = MumfordDivisor::identity(C);
        std::optional<FqPoly> extra;
        switch (t % 5) {
          case 0: c = random_divisor(C, rng); break;
          case 1: {
            Rng root_rng(rng.next());
            const auto v = prime_roots(*C, ram, root_rng);
            c = mumford_validate(C, ram, v.front());
            if (ram.degree() < g) c = jac_add(c, some_prime(C, static_cast<std::size_t>(g - ram.degree()), rng));
            break;
          }
          case 2: {
            const auto P = some_prime(C, static_cast<std::size_t>(g / 2), rng);
            c = jac_add(P, P);
            break;
          }
          case 3:
          case 4: {
            c = random_divisor(C, rng);
            const auto want = t % 5 == 3 ? support::Splitting::Inert : support::Splitting::Split;
            for (;;) {
              const FqPoly s = random_irreducible(C->base(), 1 + rng.below(3), rng);
              if (support::classify(*C, s) == want) {
                extra = s;
                break;
              }
            }
            break;
          }
        }
        ++trials;
        Isogeny iso = isogeny_from_ideal(inst, phi, c);
        built.push_back(iso);
        OrePoly iota = iso.ore;
        if (extra) iota = (iota * phi.eval(*extra)).monic();
        const FqPoly u = minimal_norm_poly(phi, iota);
        for (const auto& [r, e] : factor(u).factors) {
          switch (support::classify(*C, r)) {
            case support::Splitting::Split: ++split; break;
            case support::Splitting::Inert: ++inert; break;
            case support::Splitting::Ramified: ++ramified; break;
          }
          repeated += e >= 2;
        }
        const auto fac = isogeny_to_ideal(inst, phi, iota, u, &trace);
        passed += ideal_class_reduce(inst, fac) == c;
      }
    }
    out << "passed=" << passed << "/" << trials << " split=" << split << " inert=" << inert << " ramified=" << ramified
        << " repeated=" << repeated << " branch.prime=" << trace.prime << " branch.principal=" << trace.principal;
    return trials >= 70 && passed == trials && split > 0 && inert > 0 && ramified > 0 && repeated > 0;
  });

  criterion("Velu commutation", kVeluBudget, [&built](std::ostringstream& out) {
    Rng rng(7);
    std::size_t ok = 0;
    for (const auto& iso : built) ok += velu_commutes(iso, rng, 3);
    // Plus isogenies of each toy shape and one at d = 521.
    std::size_t extra = 0;
    for (auto [q, d] : {std::pair{2u, 5}, std::pair{3u, 5}, std::pair{5u, 5}, std::pair{3u, 7}}) {
      const Instance inst = gen_instance(q, d, 1);
      const auto phi = inst.module_for(inst.j);
      for (int i = 0; i < 10; ++i, ++extra) ok += velu_commutes(isogeny_from_ideal(inst, phi, random_divisor(inst.curve, rng)), rng, 3);
    }
    const Instance big = read_instance(kReferenceFixture);
    Rng prng(36);
    const auto iso = isogeny_from_ideal(big, big.module_for(big.j), random_prime_divisor(big.curve, kActDegree, prng), false);
    ok += velu_commutes(iso, rng, 3);
    const std::size_t total = built.size() + extra + 1;
    out << "isogenies=" << ok << "/" << total << " samples_each=" << kVeluSamples;
    return !built.empty() && ok == total;
  });

  criterion("algebra suites", kAlgebraBudget, [](std::ostringstream& out) {
    Rng rng(99);
    std::vector<ExtFieldPtr> fields;
    for (auto [q, d] : {std::pair{2u, 3}, std::pair{2u, 9}, std::pair{3u, 5}, std::pair{5u, 4}, std::pair{7u, 3}})
      fields.push_back(ExtField::create(random_irreducible(PrimeField(q), static_cast<std::size_t>(d), rng)));
    std::size_t divmod_ok = 0, rgcd_ok = 0, exact_ok = 0, hex_ok = 0, factor_ok = 0;
    for (int i = 0; i < kAlgebraCases; ++i) {
      const auto& L = fields[static_cast<std::size_t>(i) % fields.size()];
      const auto p1 = support::random_ore(L, static_cast<int>(rng.below(12)), rng);
      const auto p2 = support::random_ore(L, static_cast<int>(rng.below(7)), rng);
      const auto [quo, rem] = right_divmod(p1, p2);
      divmod_ok += quo * p2 + rem == p1 && rem.degree() < p2.degree();

      const auto common = support::random_ore(L, static_cast<int>(rng.below(4)), rng);
      const auto a = support::random_ore(L, static_cast<int>(rng.below(5)), rng) * common;
      const auto b = support::random_ore(L, static_cast<int>(rng.below(5)), rng) * common;
      const auto g = rgcd(a, b);
      rgcd_ok += g.is_monic() && right_divmod(a, g).second.is_zero() && right_divmod(b, g).second.is_zero() &&
                 right_divmod(g, common).second.is_zero();

      exact_ok += exact_right_div(p1 * p2, p2) == p1;

      const FqPoly h = random_poly(PrimeField(2), 1 + rng.below(40), rng);
      hex_ok += hex_decode(hex_encode(h)) == h;

      const PrimeField F(L->q());
      const FqPoly f = random_poly(F, 2 + rng.below(9), rng);
      if (f.degree() < 1) {
        ++factor_ok;
        continue;
      }
      const auto fac = factor(f, rng.next());
      bool good = fac.recompose(F) == f;
      for (const auto& [r, e] : fac.factors) good = good && r.is_monic() && support::brute_irreducible(r);
      factor_ok += good;
    }
    const bool example = hex_decode("0x4bc") == support::poly2({2, 4, 5, 7, 10, 11}) &&
                         hex_encode(support::poly2({2, 4, 5, 7, 10, 11})) == "0x4bc";
    const std::size_t n = kAlgebraCases;
    out << "divmod=" << divmod_ok << " rgcd=" << rgcd_ok << " exact_div=" << exact_ok << " hex=" << hex_ok
        << " factor=" << factor_ok << " of " << n << " hex_example=" << example;
    return divmod_ok == n && rgcd_ok == n && exact_ok == n && hex_ok == n && factor_ok == n && example;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
