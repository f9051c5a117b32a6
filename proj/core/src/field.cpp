#include "rss/field.hpp"

#include <array>
#include <bit>

namespace rss {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

bool strong_probable_prime(std::uint64_t m, std::uint64_t witness, std::uint64_t odd_part,
                           int twos) {
  witness %= m;
  if (witness == 0) return true;
  std::uint64_t x = pow_mod(witness, odd_part, m);
  if (x == 1 || x == m - 1) return true;
  for (int r = 1; r < twos; ++r) {
    x = mul_mod(x, x, m);
    if (x == m - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : small) {
    if (m == q) return true;
    if (m % q == 0) return false;
  }
  // Miller-Rabin with the first twelve primes as witnesses is exact for all
  // m < 3.3e24, which covers the full 64-bit range.
  std::uint64_t odd_part = m - 1;
  int twos = 0;
  while ((odd_part & 1) == 0) {
    odd_part >>= 1;
    ++twos;
  }
  for (std::uint64_t w : small) {
    if (!strong_probable_prime(m, w, odd_part, twos)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p <= 2 || p >= (std::uint64_t{1} << kMaxModulusBits)) {
    throw ParameterError("modulus must satisfy 2 < p < 2^61, got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw ParameterError("modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement::FieldElement(std::uint64_t value, PrimeModulus modulus)
    : value_(value), modulus_(modulus) {
  if (value >= modulus.value()) {
    throw ParameterError("value " + std::to_string(value) + " out of range for modulus " +
                         std::to_string(modulus.value()));
  }
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ParameterError("field elements have mismatched moduli: " +
                         std::to_string(a.modulus().value()) + " vs " +
                         std::to_string(b.modulus().value()));
  }
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_modulus(*this, rhs);
  const std::uint64_t p = modulus_.value();
  std::uint64_t sum = value_ + rhs.value_;  // < 2^62, no overflow
  if (sum >= p) sum -= p;
  return FieldElement(sum, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_modulus(*this, rhs);
  const std::uint64_t p = modulus_.value();
  std::uint64_t diff = value_ >= rhs.value_ ? value_ - rhs.value_ : p - (rhs.value_ - value_);
  return FieldElement(diff, modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_modulus(*this, rhs);
  return FieldElement(mul_mod(value_, rhs.value_, modulus_.value()), modulus_);
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) {
    throw DivisionByZeroError("zero has no multiplicative inverse");
  }
  // Extended Euclid; much cheaper than the Fermat exponentiation when the
  // operand is small, which interpolation denominators usually are.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(modulus_.value());
  std::int64_t new_r = static_cast<std::int64_t>(value_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(modulus_.value());
  return FieldElement(static_cast<std::uint64_t>(t), modulus_);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(pow_mod(value_, exponent, modulus_.value()), modulus_);
}

FieldElement sample_uniform(PrimeModulus modulus, RandomSource& rng) {
  const std::uint64_t p = modulus.value();
  const int bits = std::bit_width(p - 1);
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  std::uint64_t draw;
  do {
    draw = rng.next_u64() & mask;
  } while (draw >= p);
  return FieldElement(draw, modulus);
}

}  // namespace rss
