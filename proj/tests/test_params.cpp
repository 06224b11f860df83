#include "doctest.h"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "drinact/error.hpp"
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

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json plain(const Instance& inst) { return nlohmann::json::parse(instance_to_json(inst).dump()); }

}  // namespace

TEST_CASE("generated instances satisfy every invariant") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const Instance inst = gen_instance(2, 5, s);
    const Instance replay = make_instance(inst.p, inst.charpoly.h, inst.charpoly.f, inst.j.value());
    CHECK(replay.p == inst.p);
    CHECK_NOTHROW(check_charpoly(inst, inst.j));
    CHECK(frobenius_charpoly(inst.module_for(inst.j)) == inst.charpoly);
    CHECK(is_ordinary(inst.charpoly, inst.p));
    CHECK(inst.charpoly.f.monic() == inst.p);
    CHECK(inst.seed == s);
  }
}

TEST_CASE("generation is deterministic") {
  CHECK(instance_to_json(gen_instance(3, 7, 42)).dump() == instance_to_json(gen_instance(3, 7, 42)).dump());
  CHECK(instance_to_json(gen_instance(3, 7, 42)).dump() != instance_to_json(gen_instance(3, 7, 43)).dump());
}

TEST_CASE("twenty seeds at small parameters") {
  for (auto [q, d] : {std::pair{2u, 7}, std::pair{3u, 5}}) {
    int accepted = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Instance inst = gen_instance(q, d, s);
      ++accepted;
      CHECK(is_ordinary(inst.charpoly, inst.p));
      CHECK(!inst.charpoly.h.is_zero());
    }
    CHECK(accepted > 0);
  }
  CHECK(code_of([] { gen_instance(4, 5, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { gen_instance(2, 6, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("JSON round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "drinact_params_test";
  std::filesystem::create_directories(dir);
  for (auto [q, d] : {std::pair{2u, 5}, std::pair{3u, 5}, std::pair{5u, 5}}) {
    const Instance inst = gen_instance(q, d, 7);
    const auto back = instance_from_json(plain(inst));
    CHECK(back.p == inst.p);
    CHECK(back.charpoly == inst.charpoly);
    CHECK(back.j.value() == inst.j.value());
    CHECK(back.seed == inst.seed);
    const std::string path = (dir / ("i" + std::to_string(q) + ".json")).string();
    write_instance(inst, path);
    const std::string text = slurp(path);
    CHECK(text.back() == '\n');
    write_instance(read_instance(path), path);
    CHECK(slurp(path) == text);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("d=521 fixture") {
  const Instance inst = read_instance(DRINACT_FIXTURES "/paper_521.json");
  CHECK(inst.q() == 2);
  CHECK(inst.d() == 521);
  CHECK(inst.p == poly2({0, 32, 521}));
  REQUIRE(inst.order);
  CHECK(inst.order->str() == "630826364935091345208232632830095486700989925779489730518885887312048146591378");
  CHECK(inst.curve->genus() == 260);
}

TEST_CASE("malformed instance files") {
  const auto good = plain(gen_instance(2, 5, 1));
  auto missing = good;
  missing.erase("h");
  CHECK(code_of([&] { instance_from_json(missing); }) == ErrorCode::MalformedInstance);
  auto badhex = good;
  badhex["j"] = "0xzz";
  CHECK(code_of([&] { instance_from_json(badhex); }) == ErrorCode::MalformedHex);
  auto wrongd = good;
  wrongd["d"] = 7u;
  CHECK(code_of([&] { instance_from_json(wrongd); }) == ErrorCode::MalformedInstance);
  auto badq = good;
  badq["q"] = 4u;
  CHECK(code_of([&] { instance_from_json(badq); }) == ErrorCode::InvalidArgument);
  auto badorder = good;
  badorder["order"] = "12a";
  CHECK(code_of([&] { instance_from_json(badorder); }) == ErrorCode::MalformedInstance);
  CHECK(code_of([&] { instance_from_json(nlohmann::json::array()); }) == ErrorCode::MalformedInstance);
  CHECK(code_of([] { read_instance("/nonexistent/instance.json"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("divisor JSON") {
  const Instance inst = gen_instance(2, 7, 2);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto div = random_divisor(inst.curve, rng);
    CHECK(divisor_from_json(inst.curve, divisor_to_json(div)) == div);
  }
  CHECK(code_of([&] { divisor_from_json(inst.curve, nlohmann::json{{"u", "0x1"}}); }) == ErrorCode::InvalidArgument);
}
