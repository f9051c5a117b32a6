#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rss/errors.hpp"
#include "rss/random.hpp"

namespace rss::xor2 {

/// Bit string, index 0 = leftmost (most significant) bit as written.
using BitString = std::vector<bool>;

BitString xor_bits(const BitString& a, const BitString& b);

/// "0"/"1" rendering, leftmost bit first.
std::string format_bits(const BitString& bits);
BitString parse_bits(std::string_view text);

/// Lowercase hex of the bit string read as a big-endian number, zero-padded
/// to exactly ceil(bits/4) digits.
std::string format_hex_bits(const BitString& bits);
BitString parse_hex_bits(std::string_view text, std::size_t bit_count);

/// Secrets of doubling sizes: secret m has exactly 2^(m-1) bits, so m levels
/// carry 2^m - 1 secret bits inside a 2^(m-1)-bit share pair.
using SecretSequence = std::vector<BitString>;

struct SharePair {
  BitString share1;
  BitString share2;

  bool operator==(const SharePair&) const = default;
};

inline constexpr std::size_t kMaxLevels = 32;

/// Nests the secrets into one 2-of-2 share pair. The base level shares the
/// one-bit secret as (b, b ^ s1) for a random bit b; each further level
/// extends share1 on the right and share2 on the left with the pad bits
/// forced by the per-half XOR constraint, so share1 ^ share2 always equals
/// the current level's secret.
SharePair split(const SecretSequence& secrets, RandomSource& rng);

/// Inverse of split: XOR the pair for the top secret, then peel — the left
/// half of share1 and the right half of share2 are the previous level's pair.
SecretSequence reconstruct(const SharePair& pair, std::size_t levels);

}  // namespace rss::xor2
