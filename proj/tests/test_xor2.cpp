#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rss/xor2.hpp"

using namespace rss;
using xor2::BitString;

namespace {

xor2::SecretSequence random_secrets(std::size_t levels, std::mt19937_64& gen) {
  xor2::SecretSequence secrets(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    secrets[i].resize(std::size_t{1} << i);
    for (std::size_t j = 0; j < secrets[i].size(); ++j) secrets[i][j] = gen() & 1;
  }
  return secrets;
}

}  // namespace

TEST_CASE("three-secret example: shares 0010 and 1001") {
  const xor2::SecretSequence secrets = {xor2::parse_bits("1"), xor2::parse_bits("01"),
                                        xor2::parse_bits("1011")};
  FixedSource rng({0});  // base bit 0
  const xor2::SharePair pair = xor2::split(secrets, rng);
  CHECK(xor2::format_bits(pair.share1) == "0010");
  CHECK(xor2::format_bits(pair.share2) == "1001");

  const xor2::SecretSequence recovered = xor2::reconstruct(pair, 3);
  REQUIRE(recovered.size() == 3);
  CHECK(xor2::format_bits(recovered[0]) == "1");
  CHECK(xor2::format_bits(recovered[1]) == "01");
  CHECK(xor2::format_bits(recovered[2]) == "1011");
}

TEST_CASE("single zero secret with base bit 0 gives equal shares") {
  FixedSource rng({0});
  const xor2::SharePair pair = xor2::split({xor2::parse_bits("0")}, rng);
  CHECK(xor2::format_bits(pair.share1) == "0");
  CHECK(xor2::format_bits(pair.share2) == "0");

  const auto recovered = xor2::reconstruct({BitString{false}, BitString{false}}, 1);
  CHECK(xor2::format_bits(recovered[0]) == "0");
}

TEST_CASE("round trip up to twelve levels") {
  std::mt19937_64 gen(1010);
  SeededRandomSource rng(2020);
  for (std::size_t levels = 1; levels <= 12; ++levels) {
    const auto secrets = random_secrets(levels, gen);
    const xor2::SharePair pair = xor2::split(secrets, rng);
    CHECK(pair.share1.size() == std::size_t{1} << (levels - 1));
    CHECK(pair.share2.size() == pair.share1.size());
    CHECK(xor2::reconstruct(pair, levels) == secrets);
  }
}

TEST_CASE("capacity: m levels pack 2^m - 1 secret bits into 2^(m-1)-bit shares") {
  std::mt19937_64 gen(3030);
  SeededRandomSource rng(4040);
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto secrets = random_secrets(m, gen);
    std::size_t secret_bits = 0;
    for (const BitString& s : secrets) secret_bits += s.size();
    CHECK(secret_bits == (std::size_t{1} << m) - 1);

    const xor2::SharePair pair = xor2::split(secrets, rng);
    CHECK(pair.share1.size() == std::size_t{1} << (m - 1));
    CHECK(pair.share2.size() == std::size_t{1} << (m - 1));
  }
}

TEST_CASE("exhaustive two-level inverse: every share pair is reachable") {
  // For all 16 pairs of 2-bit shares: reconstruct, then split again with the
  // recovered base bit (share1's first bit); the pair must come back.
  for (unsigned bits = 0; bits < 16; ++bits) {
    const xor2::SharePair pair = {{(bits & 8) != 0, (bits & 4) != 0},
                                  {(bits & 2) != 0, (bits & 1) != 0}};
    const xor2::SecretSequence secrets = xor2::reconstruct(pair, 2);
    FixedSource rng({pair.share1[0] ? std::uint64_t{1} : std::uint64_t{0}});
    CHECK(xor2::split(secrets, rng) == pair);
  }
}

TEST_CASE("running XOR of the shares equals the current secret at every level") {
  std::mt19937_64 gen(5050);
  const auto secrets = random_secrets(8, gen);
  for (std::size_t prefix = 1; prefix <= secrets.size(); ++prefix) {
    FixedSource rng({1});  // same base bit for every prefix
    const xor2::SecretSequence sub(secrets.begin(), secrets.begin() + prefix);
    const xor2::SharePair pair = xor2::split(sub, rng);
    CHECK(xor2::xor_bits(pair.share1, pair.share2) == secrets[prefix - 1]);
  }
}

TEST_CASE("validation") {
  SeededRandomSource rng(1);
  CHECK_THROWS_AS(xor2::split({}, rng), ParameterError);
  CHECK_THROWS_AS(xor2::split({xor2::parse_bits("10")}, rng), ParameterError);
  CHECK_THROWS_AS(xor2::split({xor2::parse_bits("1"), xor2::parse_bits("010")}, rng),
                  ParameterError);

  CHECK_THROWS_AS(xor2::reconstruct({BitString(4), BitString(4)}, 2), ParameterError);
  CHECK_THROWS_AS(xor2::reconstruct({BitString(2), BitString(4)}, 3), ParameterError);
  CHECK_THROWS_AS(xor2::reconstruct({BitString(1), BitString(1)}, 0), ParameterError);

  CHECK_THROWS_AS(xor2::parse_bits("01x"), ParameterError);
  CHECK_THROWS_AS(xor2::xor_bits(BitString(3), BitString(4)), ParameterError);
}

TEST_CASE("hex rendering of bit strings") {
  CHECK(xor2::format_hex_bits(xor2::parse_bits("0010")) == "2");
  CHECK(xor2::format_hex_bits(xor2::parse_bits("1001")) == "9");
  CHECK(xor2::format_hex_bits(xor2::parse_bits("1")) == "1");
  CHECK(xor2::format_hex_bits(xor2::parse_bits("01")) == "1");
  CHECK(xor2::format_hex_bits(xor2::parse_bits("11111111")) == "ff");
  CHECK(xor2::format_hex_bits(xor2::parse_bits("000100100011")) == "123");

  CHECK(xor2::parse_hex_bits("2", 4) == xor2::parse_bits("0010"));
  CHECK(xor2::parse_hex_bits("9", 4) == xor2::parse_bits("1001"));
  CHECK(xor2::parse_hex_bits("1", 2) == xor2::parse_bits("01"));

  // stray bits beyond the declared length, bad width, bad characters
  CHECK_THROWS_AS(xor2::parse_hex_bits("2", 1), ParameterError);
  CHECK_THROWS_AS(xor2::parse_hex_bits("ff", 4), ParameterError);
  CHECK_THROWS_AS(xor2::parse_hex_bits("F", 4), ParameterError);
  CHECK_THROWS_AS(xor2::parse_hex_bits("g", 4), ParameterError);

  std::mt19937_64 gen(6060);
  for (std::size_t len : {1, 2, 3, 4, 5, 8, 13, 64, 200}) {
    BitString bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = gen() & 1;
    CHECK(xor2::parse_hex_bits(xor2::format_hex_bits(bits), len) == bits);
  }
}
