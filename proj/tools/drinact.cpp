#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "drinact/encoding.hpp"
#include "drinact/error.hpp"
#include "drinact/oracle.hpp"
#include "drinact/params.hpp"

using namespace drinact;

namespace {

constexpr int kInputError = 2;
constexpr int kMathError = 3;

int report(const Error& e) {
  std::cerr << "error=" << to_string(e.code()) << "\n" << "detail=" << e.what() << "\n";
  return is_input_error(e.code()) ? kInputError : kMathError;
}

// Per-trial seed, so trials can run in any order or in parallel.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) { return seed * 0x9e3779b97f4a7c15ULL + t + 1; }

FieldElement pick_j(const Instance& inst, const std::string& j) {
  return j.empty() ? inst.j : decode_element(inst.field, j);
}

int cmd_gen(std::uint32_t q, int d, std::uint64_t seed, const std::string& out) {
  const Instance inst = gen_instance(q, d, seed);
  if (out.empty() || out == "-")
    std::cout << instance_to_json(inst).dump(2) << "\n";
  else
    write_instance(inst, out);
  std::cout << "q=" << q << "\nd=" << d << "\nh=" << encode_poly(inst.charpoly.h) << "\nj=" << encode_element(inst.j)
            << "\ngenus=" << inst.curve->genus() << "\n";
  return 0;
}

struct ActArgs {
  std::string instance, u, v, j;
  std::size_t random_degree = 0;
  std::uint64_t seed = 0;
  bool no_strict = false, strict = false, check = false;
};

int cmd_act(const ActArgs& a) {
  const Instance inst = read_instance(a.instance);
  const FieldElement j = pick_j(inst, a.j);
  std::optional<bool> strict;
  if (a.strict) strict = true;
  if (a.no_strict) strict = false;

  std::optional<MumfordDivisor> div;
  if (a.random_degree > 0) {
    if (static_cast<int>(a.random_degree) > inst.curve->genus())
      raise(ErrorCode::InvalidArgument, "--random-degree exceeds the genus");
    Rng rng(a.seed);
    div = random_prime_divisor(inst.curve, a.random_degree, rng);
  } else {
    if (a.u.empty()) raise(ErrorCode::InvalidArgument, "--u/--v or --random-degree is required");
    const PrimeField& F = inst.curve->base();
    const FqPoly u = decode_poly(F, a.u);
    const FqPoly v = decode_poly(F, a.v.empty() ? std::string(F.is_binary() ? "0x0" : "0") : a.v);
    try {
      div = mumford_validate(inst.curve, u, v);
    } catch (const Error& e) {
      if (is_input_error(e.code())) throw;
      raise(ErrorCode::InvalidMumford, e.what());
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const FieldElement out = group_action(inst, j, *div, strict);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "u=" << encode_poly(div->u()) << "\nv=" << encode_poly(div->v()) << "\nj_in=" << encode_element(j)
            << "\nj_out=" << encode_element(out) << "\n";
  if (a.check) {
    const bool ok = charpoly_matches(inst.module_for(out), inst.charpoly);
    std::cout << "charpoly_ok=" << (ok ? "true" : "false") << "\n";
    if (!ok) return kMathError;
  }
  std::cerr << "time_ms=" << ms << "\n";
  return 0;
}

int cmd_verify(const std::string& path, bool solve) {
  Instance inst = [&] {
    try {
      return read_instance(path);
    } catch (const Error& e) {
      if (is_input_error(e.code())) throw;
      std::cout << "check.instance=fail\n";
      throw;
    }
  }();
  std::cout << "check.instance=pass\n" << "genus=" << inst.curve->genus() << "\n";
  const DrinfeldModule phi = inst.module_for(inst.j);
  if (!charpoly_holds(phi, inst.charpoly)) {
    std::cout << "check.charpoly_relation=fail\n";
    raise(ErrorCode::CharpolyMismatch, "tau_L^2 + phi_h tau_L - phi_f != 0 for the instance j");
  }
  std::cout << "check.charpoly_relation=pass\n";
  if (!is_ordinary(inst.charpoly, inst.p)) raise(ErrorCode::InvariantViolated, "instance is supersingular");
  std::cout << "check.ordinary=pass\n";
  if (solve) {
    const CharPoly cp = frobenius_charpoly(phi);
    const bool ok = cp == inst.charpoly;
    std::cout << "check.charpoly_solve=" << (ok ? "pass" : "fail") << "\n";
    if (!ok) raise(ErrorCode::CharpolyMismatch, "solved characteristic polynomial differs from the instance");
  }
  if (inst.order && inst.curve->genus() > 0) {
    Rng rng(1);
    const MumfordDivisor D = random_divisor(inst.curve, rng);
    const bool ok = jac_scalar_mul(D, *inst.order).is_identity();
    std::cout << "check.order_annihilates=" << (ok ? "pass" : "fail") << "\n";
    if (!ok) raise(ErrorCode::InvariantViolated, "order does not annihilate a random divisor");
  }
  std::cout << "verdict=pass\n";
  return 0;
}

int cmd_roundtrip(const std::string& path, std::size_t trials, std::uint64_t seed) {
  const Instance inst = read_instance(path);
  const DrinfeldModule phi = inst.module_for(inst.j);
  IdealTrace trace;
  std::size_t passed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    Rng rng(s);
    const MumfordDivisor c = random_divisor(inst.curve, rng);
    const Isogeny iso = isogeny_from_ideal(inst, phi, c);
    const FqPoly u = minimal_norm_poly(phi, iso.ore);
    const IdealFactorization fac = isogeny_to_ideal(inst, phi, iso.ore, u, &trace);
    if (!(ideal_class_reduce(inst, fac) == c)) {
      std::cout << "trials=" << trials << "\npassed=" << passed << "\nfailing_seed=" << s << "\nu=" << encode_poly(c.u())
                << "\nv=" << encode_poly(c.v()) << "\nideal=" << to_string(fac) << "\n";
      return kMathError;
    }
    ++passed;
  }
  std::cout << "trials=" << trials << "\npassed=" << passed << "\nfailed=0\nbranch.coprime=" << trace.coprime
            << "\nbranch.principal=" << trace.principal << "\nbranch.prime=" << trace.prime << "\n";
  return 0;
}

int cmd_bench(const std::string& path, int deg, std::size_t trials, unsigned threads, std::uint64_t seed) {
  const Instance inst = read_instance(path);
  if (deg < 1 || deg > inst.curve->genus()) raise(ErrorCode::InvalidArgument, "--deg must lie in [1, genus]");
  std::vector<MumfordDivisor> divs;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    divs.push_back(random_prime_divisor(inst.curve, static_cast<std::size_t>(deg), rng));
  }
  std::vector<std::optional<FieldElement>> outs(trials);
  std::vector<double> ms(trials);
  auto run = [&](std::size_t t) {
    const auto t0 = std::chrono::steady_clock::now();
    outs[t] = group_action(inst, inst.j, divs[t], false);
    ms[t] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < trials; t += threads) run(t);
    });
  for (auto& th : pool) th.join();

  for (std::size_t t = 0; t < trials; ++t) std::cout << "j_out[" << t << "]=" << encode_element(*outs[t]) << "\n";
  std::vector<double> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  std::cerr << "deg  trials  min_ms  median_ms  max_ms\n";
  if (trials > 0)
    std::cerr << deg << "  " << trials << "  " << sorted.front() << "  " << sorted[trials / 2] << "  " << sorted.back()
              << "\n";
  return 0;
}

int cmd_charpoly(const std::string& path, const std::string& j) {
  const Instance inst = read_instance(path);
  const FieldElement jj = pick_j(inst, j);
  const CharPoly cp = frobenius_charpoly(inst.module_for(jj));
  const auto twist = twist_factor(inst.charpoly, cp);
  std::cout << "h=" << encode_poly(cp.h) << "\nf=" << encode_poly(cp.f) << "\nin_class=" << (twist ? "true" : "false")
            << "\n";
  if (twist) std::cout << "twist=" << *twist << "\n";
  return 0;
}

int cmd_orbit(const std::string& path, std::uint32_t q, int d, std::uint64_t seed) {
  const Instance inst = path.empty() ? gen_instance(q, d, seed) : read_instance(path);
  const auto rep = oracle::orbit_check(inst, seed);
  std::cout << rep.to_string();
  return rep.ok() ? 0 : kMathError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class group action on rank-2 Drinfeld modules"};
  app.require_subcommand(1);

  std::uint32_t q = 2;
  int d = 5;
  std::uint64_t seed = 0;
  std::string out, instance, j;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--q", q, "prime field size")->required();
  gen->add_option("--d", d, "extension degree (odd, >= 5)")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "output file ('-' for stdout)");

  ActArgs act_args;
  auto* act = app.add_subcommand("act", "apply a divisor class to a j-invariant");
  act->add_option("--instance", act_args.instance)->required();
  act->add_option("--u", act_args.u);
  act->add_option("--v", act_args.v);
  act->add_option("--j", act_args.j, "defaults to the instance j");
  act->add_option("--random-degree", act_args.random_degree, "use a random prime divisor of this degree");
  act->add_option("--seed", act_args.seed);
  act->add_flag("--no-strict", act_args.no_strict, "skip the input charpoly check");
  act->add_flag("--strict", act_args.strict, "force the input charpoly check");
  act->add_flag("--check", act_args.check, "verify the output against the instance charpoly");

  bool solve = false;
  auto* verify = app.add_subcommand("verify", "re-check instance invariants");
  verify->add_option("--instance", instance)->required();
  verify->add_flag("--solve", solve, "also solve for the charpoly by linear algebra");

  std::size_t trials = 10;
  auto* roundtrip = app.add_subcommand("roundtrip", "ideal -> isogeny -> ideal round trips");
  roundtrip->add_option("--instance", instance)->required();
  roundtrip->add_option("--trials", trials);
  roundtrip->add_option("--seed", seed);

  int deg = 1;
  unsigned threads = 1;
  auto* bench = app.add_subcommand("bench", "time the group action");
  bench->add_option("--instance", instance)->required();
  bench->add_option("--deg", deg)->required();
  bench->add_option("--trials", trials);
  bench->add_option("--threads", threads);
  bench->add_option("--seed", seed);

  auto* charpoly = app.add_subcommand("charpoly", "solve for the Frobenius characteristic polynomial");
  charpoly->add_option("--instance", instance)->required();
  charpoly->add_option("--j", j);

  auto* orbit = app.add_subcommand("orbit", "exhaustive orbit check on a toy instance");
  orbit->add_option("--instance", instance);
  orbit->add_option("--q", q);
  orbit->add_option("--d", d);
  orbit->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) return cmd_gen(q, d, seed, out);
    if (*act) return cmd_act(act_args);
    if (*verify) return cmd_verify(instance, solve);
    if (*roundtrip) return cmd_roundtrip(instance, trials, seed);
    if (*bench) return cmd_bench(instance, deg, trials, threads, seed);
    if (*charpoly) return cmd_charpoly(instance, j);
    if (*orbit) return cmd_orbit(instance, q, d, seed);
  } catch (const Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "error=Internal\ndetail=" << e.what() << "\n";
    return 1;
  }
  return kInputError;
}
