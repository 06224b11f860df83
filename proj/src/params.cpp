#include "drinact/params.hpp"

#include <fstream>

#include "drinact/encoding.hpp"
#include "drinact/error.hpp"

namespace drinact {

Instance gen_instance(std::uint32_t q, int d, std::uint64_t seed) {
  if (!is_prime(q) || q >= (1u << 16)) raise(ErrorCode::InvalidArgument, "q must be a prime below 2^16");
  if (d < 5 || d % 2 == 0) raise(ErrorCode::InvalidArgument, "d must be odd and at least 5");
  const PrimeField F(q);
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const FqPoly p = random_irreducible(F, static_cast<std::size_t>(d), rng);
    const ExtFieldPtr L = ExtField::create(p);
    const FieldElement j = L->random_nonzero(rng);
    const CharPoly cp = frobenius_charpoly(DrinfeldModule::from_j(j, L->generator()));
    if (cp.h.is_zero()) continue;
    try {
      curve_validate(cp.h, cp.f);
    } catch (const Error&) {
      continue;
    }
    if (!(cp.f.monic() == p)) raise(ErrorCode::InconsistentSystem, "monic(f) differs from p");
    return make_instance(p, cp.h, cp.f, j.value(), std::nullopt, seed);
  }
  raise(ErrorCode::GenerationFailed, "no ordinary smooth instance within 1000 attempts");
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json out;
  out["q"] = inst.q();
  out["d"] = inst.d();
  out["p"] = encode_poly(inst.p);
  out["h"] = encode_poly(inst.charpoly.h);
  out["f"] = encode_poly(inst.charpoly.f);
  out["j"] = encode_poly(inst.j.value());
  if (inst.order) out["order"] = inst.order->str();
  if (inst.seed) out["seed"] = *inst.seed;
  return out;
}

namespace {

const nlohmann::json& field_of(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) raise(ErrorCode::MalformedInstance, std::string("missing key '") + key + "'");
  return j.at(key);
}

FqPoly poly_of(const nlohmann::json& j, const char* key, const PrimeField& F) {
  const auto& v = field_of(j, key);
  if (!v.is_string()) raise(ErrorCode::MalformedInstance, std::string("'") + key + "' must be a string");
  return decode_poly(F, v.get<std::string>());
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) raise(ErrorCode::MalformedInstance, "instance must be a JSON object");
  const auto& jq = field_of(j, "q");
  const auto& jd = field_of(j, "d");
  if (!jq.is_number_unsigned() || !jd.is_number_unsigned())
    raise(ErrorCode::MalformedInstance, "'q' and 'd' must be non-negative integers");
  const auto q = jq.get<std::uint64_t>();
  if (q < 2 || q >= (1u << 16) || !is_prime(q)) raise(ErrorCode::InvalidArgument, "q must be a prime below 2^16");
  const PrimeField F(static_cast<std::uint32_t>(q));
  const FqPoly p = poly_of(j, "p", F);
  if (p.degree() != static_cast<int>(jd.get<std::uint64_t>()))
    raise(ErrorCode::MalformedInstance, "'d' does not match deg p");
  std::optional<BigInt> order;
  if (j.contains("order")) {
    const auto& o = j.at("order");
    if (!o.is_string()) raise(ErrorCode::MalformedInstance, "'order' must be a decimal string");
    const std::string s = o.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      raise(ErrorCode::MalformedInstance, "'order' must be a decimal string");
    order = BigInt(s);
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) raise(ErrorCode::MalformedInstance, "'seed' must be a non-negative integer");
    seed = j.at("seed").get<std::uint64_t>();
  }
  return make_instance(p, poly_of(j, "h", F), poly_of(j, "f", F), poly_of(j, "j", F), std::move(order), seed);
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidArgument, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::MalformedInstance, e.what());
  }
  return instance_from_json(j);
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::InvalidArgument, "cannot write " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

nlohmann::ordered_json divisor_to_json(const MumfordDivisor& div) {
  nlohmann::ordered_json out;
  out["u"] = encode_poly(div.u());
  out["v"] = encode_poly(div.v());
  return out;
}

MumfordDivisor divisor_from_json(const CurvePtr& curve, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.at("u").is_string() || !j.at("v").is_string())
    raise(ErrorCode::InvalidArgument, "divisor must be {\"u\": ..., \"v\": ...}");
  const PrimeField& F = curve->base();
  return mumford_validate(curve, decode_poly(F, j.at("u").get<std::string>()),
                          decode_poly(F, j.at("v").get<std::string>()));
}

}  // namespace drinact
