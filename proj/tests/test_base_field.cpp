#include "doctest.h"
#include "support.hpp"

#include "drinact/encoding.hpp"
#include "drinact/error.hpp"

using namespace drinact;
using support::poly2;

namespace {

ExtFieldPtr f2_5() { return ExtField::create(poly2({0, 2, 5})); }

}  // namespace

TEST_CASE("modulus relation drives multiplication") {
  auto L = f2_5();
  const auto t = L->generator();
  CHECK(t.pow(4) * t == L->element(poly2({0, 2})));
  CHECK(t.frobenius(1) == L->element(poly2({2})));
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto L = ExtField::create(random_irreducible(PrimeField(q), 7, rng));
    for (int i = 0; i < 200; ++i) {
      const auto a = L->random(rng), b = L->random(rng), c = L->random(rng);
      CHECK(a + L->zero() == a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == L->one());
    }
    CHECK_THROWS_AS(L->zero().inverse(), Error);
  }
}

TEST_CASE("frobenius fixes the prime field and has order d") {
  Rng rng(3);
  for (std::uint32_t q : {2u, 3u}) {
    auto L = ExtField::create(random_irreducible(PrimeField(q), 9, rng));
    for (std::uint32_t c = 0; c < q; ++c) CHECK(L->constant(c).frobenius(4) == L->constant(c));
    for (int i = 0; i < 50; ++i) {
      const auto x = L->random(rng);
      CHECK(frobenius_power(x, 9) == x);
      CHECK(frobenius_power(x, 2) == x.pow(BigInt(q) * q));
    }
  }
}

TEST_CASE("frobenius agrees with exponentiation on sparse and dense moduli") {
  Rng rng(21);
  // The trinomial takes the word-wise reduction path; the random modulus of
  // degree 200 takes the precomputed-matrix path.
  std::vector<ExtFieldPtr> fields = {ExtField::create(poly2({0, 32, 521})),
                                     ExtField::create(random_irreducible(PrimeField(2), 200, rng)),
                                     ExtField::create(random_irreducible(PrimeField(2), 13, rng)),
                                     ExtField::create(random_irreducible(PrimeField(3), 31, rng))};
  for (const auto& L : fields) {
    for (int i = 0; i < 20; ++i) {
      const auto x = L->random(rng);
      for (unsigned k : {1u, 2u, 3u, 7u}) {
        BigInt e = 1;
        for (unsigned s = 0; s < k; ++s) e *= L->q();
        CHECK(x.frobenius(k) == x.pow(e));
      }
    }
  }
}

TEST_CASE("norm matches the determinant of multiplication") {
  Rng rng(5);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const PrimeField F(q);
    for (int d = 2; d <= 7; ++d) {
      auto L = ExtField::create(random_irreducible(F, static_cast<std::size_t>(d), rng));
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = L->random(rng);
        std::vector<std::vector<std::uint32_t>> m(static_cast<std::size_t>(d), std::vector<std::uint32_t>(static_cast<std::size_t>(d)));
        auto basis = L->one();
        for (int c = 0; c < d; ++c) {
          const auto col = x * basis;
          for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = col.coeff(static_cast<std::size_t>(r));
          basis *= L->generator();
        }
        CHECK(norm_to_base(x) == L->constant(support::det(F, m)));
      }
      CHECK(norm_to_base(L->one()) == L->one());
      for (std::uint32_t c = 1; c < q; ++c) CHECK(norm_to_base(L->constant(c)) == L->constant(F.pow(c, static_cast<std::uint64_t>(d))));
    }
  }
}

TEST_CASE("hex nibble encoding") {
  CHECK(hex_decode("0x4bc") == poly2({2, 4, 5, 7, 10, 11}));
  CHECK(hex_encode(poly2({2, 4, 5, 7, 10, 11})) == "0x4bc");
  CHECK(hex_decode("0x21") == poly2({1, 4}));
  CHECK(hex_encode(poly2({1, 4})) == "0x21");
  CHECK(hex_encode(FqPoly(PrimeField(2))) == "0x0");
  CHECK(hex_decode("0x0").is_zero());
  CHECK(hex_decode("0x100") == poly2({0}));
  CHECK(hex_decode("0xAB") == hex_decode("0xab"));
  for (const char* bad : {"", "0x", "4bc", "0xg1", "0x 1", "1x00"}) CHECK_THROWS_AS(hex_decode(bad), Error);
}

TEST_CASE("hex round trip over every polynomial of degree below 16") {
  const PrimeField F(2);
  for (std::uint64_t i = 0; i < (1u << 16); ++i) {
    const FqPoly p = support::poly_index(F, i, 16);
    REQUIRE(hex_decode(hex_encode(p)) == p);
  }
}

TEST_CASE("decimal encoding for odd characteristic") {
  const PrimeField F(3);
  const FqPoly p(F, std::vector<std::uint32_t>{1, 0, 2});
  CHECK(encode_poly(p) == "1,0,2");
  CHECK(decode_poly(F, "1,0,2") == p);
  CHECK_THROWS_AS(decode_poly(F, "1,3"), Error);
  Rng rng(8);
  auto L = ExtField::create(random_irreducible(F, 5, rng));
  for (int i = 0; i < 100; ++i) {
    const auto x = L->random(rng);
    CHECK(decode_element(L, encode_element(x)) == x);
  }
}
