#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "drinact/action.hpp"

namespace drinact {

/// Samples p, then j, derives (h, f) from the Frobenius relation and keeps
/// the first ordinary, smooth result. GenerationFailed after 1000 attempts.
Instance gen_instance(std::uint32_t q, int d, std::uint64_t seed);

nlohmann::ordered_json instance_to_json(const Instance& inst);
/// MalformedInstance / MalformedHex / InvalidArgument on bad input.
Instance instance_from_json(const nlohmann::json& j);

Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);

nlohmann::ordered_json divisor_to_json(const MumfordDivisor& div);
MumfordDivisor divisor_from_json(const CurvePtr& curve, const nlohmann::json& j);

}  // namespace drinact
