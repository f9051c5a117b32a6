#pragma once

#include <cstdint>
#include <limits>

#include "rss/errors.hpp"
#include "rss/random.hpp"

namespace rss {

/// Exact primality test, valid for every 64-bit input (deterministic
/// strong-pseudoprime witnesses, no probabilistic failure).
bool is_prime(std::uint64_t m);

/// The prime p defining Z_p. Construction validates primality and the size
/// bound 2 < p < 2^61 (so products of residues fit a 128-bit intermediate).
class PrimeModulus {
 public:
  static constexpr std::uint64_t kMaxModulusBits = 61;

  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint64_t p_;
};

/// 2^61 - 1, a Mersenne prime. Large enough that 7-byte message chunks always
/// fit as residues.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// A residue in Z_p, always kept in canonical range [0, p).
class FieldElement {
 public:
  /// Requires value < p; out-of-range input is rejected rather than reduced,
  /// since silently wrapping a secret would destroy it.
  FieldElement(std::uint64_t value, PrimeModulus modulus);

  std::uint64_t value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;

  /// Multiplicative inverse; the zero element has none.
  FieldElement inverse() const;

  FieldElement pow(std::uint64_t exponent) const;

  bool operator==(const FieldElement&) const = default;

 private:
  std::uint64_t value_;
  PrimeModulus modulus_;
};

/// Uniform residue in {0, ..., p-1} by rejection sampling (a plain modulo
/// would bias small residues).
FieldElement sample_uniform(PrimeModulus modulus, RandomSource& rng);

}  // namespace rss
