#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "rss/field.hpp"

using namespace rss;

namespace {

// Independent arbitrary-precision product check: 128-bit widening multiply
// done here, not through FieldElement.
std::uint64_t oracle_mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Lucas-Lehmer: 2^q - 1 (q odd prime) is prime iff s_{q-2} == 0 where
// s_0 = 4, s_{i+1} = s_i^2 - 2 mod 2^q - 1. Independent of is_prime.
bool lucas_lehmer(unsigned q) {
  const std::uint64_t m = (std::uint64_t{1} << q) - 1;
  unsigned __int128 s = 4;
  for (unsigned i = 0; i < q - 2; ++i) {
    s = (s * s + m - 2) % m;
  }
  return s == 0;
}

std::vector<bool> sieve(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

}  // namespace

TEST_CASE("arithmetic matches direct computation") {
  PrimeModulus p(131);
  CHECK(FieldElement(56, p) * FieldElement(2, p) == FieldElement(112, p));
  CHECK(FieldElement(49, p) * FieldElement(9, p) ==
        FieldElement(oracle_mul_mod(49, 9, 131), p));
  CHECK(oracle_mul_mod(49, 9, 131) == 48);

  SeededRandomSource rng(7);
  for (int i = 0; i < 200; ++i) {
    FieldElement x = sample_uniform(p, rng);
    CHECK(FieldElement(0, p) + x == x);
    CHECK(x - x == FieldElement(0, p));
  }
}

TEST_CASE("arithmetic near the modulus cap stays exact") {
  PrimeModulus p(kDefaultPrime);
  FieldElement a(kDefaultPrime - 1, p);
  FieldElement b(kDefaultPrime - 2, p);
  // (p-1)(p-2) = p^2 - 3p + 2 == 2 mod p
  CHECK(a * b == FieldElement(2, p));
  CHECK(a + a == FieldElement(kDefaultPrime - 2, p));
  CHECK(FieldElement(0, p) - a == FieldElement(1, p));
}

TEST_CASE("inverses") {
  PrimeModulus p(131);
  CHECK(FieldElement(1, p).inverse() == FieldElement(1, p));
  CHECK(FieldElement(2, p).inverse() == FieldElement(66, p));
  CHECK_THROWS_AS(FieldElement(0, p).inverse(), DivisionByZeroError);

  PrimeModulus p13(13);
  for (std::uint64_t a = 1; a < 13; ++a) {
    FieldElement fa(a, p13);
    CHECK(fa * fa.inverse() == FieldElement(1, p13));
  }

  PrimeModulus big(kDefaultPrime);
  SeededRandomSource rng(11);
  for (int i = 0; i < 100; ++i) {
    FieldElement a = sample_uniform(big, rng);
    if (a.value() == 0) continue;
    CHECK(a * a.inverse() == FieldElement(1, big));
  }
}

TEST_CASE("field axioms hold exhaustively for small moduli") {
  for (std::uint64_t q : {3, 5, 7, 11, 13, 17}) {
    PrimeModulus p(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        FieldElement fa(a, p), fb(b, p);
        CHECK(fa + fb == fb + fa);
        CHECK(fa * fb == fb * fa);
        for (std::uint64_t c = 0; c < q; ++c) {
          FieldElement fc(c, p);
          CHECK((fa + fb) + fc == fa + (fb + fc));
          CHECK((fa * fb) * fc == fa * (fb * fc));
          CHECK(fa * (fb + fc) == fa * fb + fa * fc);
        }
      }
      if (a != 0) {
        FieldElement fa(a, p);
        CHECK(fa * fa.inverse() == FieldElement(1, p));
        CHECK(fa.pow(q - 1) == FieldElement(1, p));  // Fermat
      }
    }
  }
}

TEST_CASE("modulus mismatch and range violations are rejected") {
  PrimeModulus p1(131), p2(127);
  CHECK_THROWS_AS(FieldElement(1, p1) + FieldElement(1, p2), ParameterError);
  CHECK_THROWS_AS(FieldElement(1, p1) * FieldElement(1, p2), ParameterError);
  CHECK_THROWS_AS(FieldElement(131, p1), ParameterError);
  CHECK_THROWS_AS(FieldElement(200, p1), ParameterError);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeModulus(0), ParameterError);
  CHECK_THROWS_AS(PrimeModulus(1), ParameterError);
  CHECK_THROWS_AS(PrimeModulus(2), ParameterError);  // below the 2 < p bound
  CHECK_THROWS_AS(PrimeModulus(4), ParameterError);
  CHECK_THROWS_AS(PrimeModulus(std::uint64_t{1} << 61), ParameterError);
  CHECK_THROWS_AS(PrimeModulus((std::uint64_t{1} << 61) + 1), ParameterError);
  CHECK_NOTHROW(PrimeModulus{3});
  CHECK_NOTHROW(PrimeModulus{kDefaultPrime});
}

TEST_CASE("is_prime: known values") {
  CHECK(is_prime(131));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(lucas_lehmer(61));
  CHECK(is_prime(kDefaultPrime));
  CHECK_FALSE(is_prime((std::uint64_t{1} << 59) - 1));  // 2^59-1 = 179951 * ...
  // strong-pseudoprime stress: Carmichael numbers and large semiprimes
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(1105));
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(kDefaultPrime - 2));
}

TEST_CASE("is_prime agrees with the sieve up to 1e6") {
  const auto table = sieve(1'000'000);
  for (std::size_t m = 0; m <= 1'000'000; ++m) {
    if (is_prime(m) != table[m]) {
      CAPTURE(m);
      REQUIRE(is_prime(m) == table[m]);
    }
  }
  CHECK(true);
}

TEST_CASE("sample_uniform: reproducible, in range, unbiased") {
  PrimeModulus p(131);
  SeededRandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    FieldElement fa = sample_uniform(p, a);
    CHECK(fa == sample_uniform(p, b));
    CHECK(fa.value() < 131);
  }

  // Fixed words below p pass through unchanged (rejection accepts them).
  FixedSource fixed({119, 43, 98, 33});
  CHECK(sample_uniform(p, fixed).value() == 119);
  CHECK(sample_uniform(p, fixed).value() == 43);
  CHECK(sample_uniform(p, fixed).value() == 98);
  CHECK(sample_uniform(p, fixed).value() == 33);

  // Chi-style check at p=5: each residue within 5 sigma of 1/5.
  PrimeModulus p5(5);
  SeededRandomSource rng(2024);
  constexpr int kDraws = 100'000;
  int counts[5] = {};
  for (int i = 0; i < kDraws; ++i) {
    ++counts[sample_uniform(p5, rng).value()];
  }
  const double sigma = std::sqrt(0.2 * 0.8 / kDraws);
  for (int r = 0; r < 5; ++r) {
    const double freq = static_cast<double>(counts[r]) / kDraws;
    CHECK(std::abs(freq - 0.2) < 5 * sigma);
  }
}

TEST_CASE("fixed source exhausts loudly") {
  FixedSource fixed({1});
  CHECK(fixed.next_u64() == 1);
  CHECK_THROWS_AS(fixed.next_u64(), Error);
}
