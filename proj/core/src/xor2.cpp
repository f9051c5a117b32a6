#include "rss/xor2.hpp"

#include <algorithm>

namespace rss::xor2 {

BitString xor_bits(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw ParameterError("bit strings differ in length: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  BitString out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::string format_bits(const BitString& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitString parse_bits(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParameterError(std::string("invalid bit character '") + c + "'");
    }
    out.push_back(c == '1');
  }
  return out;
}

std::string format_hex_bits(const BitString& bits) {
  const std::size_t digits = (bits.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    // Bit i (from the left) has weight 2^(n-1-i); locate its nibble.
    const std::size_t bit_from_right = bits.size() - 1 - i;
    const std::size_t digit = digits - 1 - bit_from_right / 4;
    const int nibble_bit = static_cast<int>(bit_from_right % 4);
    const int value = (out[digit] <= '9' ? out[digit] - '0' : out[digit] - 'a' + 10) |
                      (1 << nibble_bit);
    out[digit] = static_cast<char>(value < 10 ? '0' + value : 'a' + value - 10);
  }
  return out;
}

BitString parse_hex_bits(std::string_view text, std::size_t bit_count) {
  const std::size_t digits = (bit_count + 3) / 4;
  if (text.size() != digits) {
    throw ParameterError("expected " + std::to_string(digits) + " hex digits for " +
                         std::to_string(bit_count) + " bits, got " + std::to_string(text.size()));
  }
  BitString out(bit_count, false);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = text[d];
    int value;
    if (c >= '0' && c <= '9') {
      value = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      value = c - 'a' + 10;
    } else {
      throw ParameterError(std::string("invalid hex character '") + c + "'");
    }
    for (int nibble_bit = 0; nibble_bit < 4; ++nibble_bit) {
      const bool bit = (value >> nibble_bit) & 1;
      const std::size_t bit_from_right = (digits - 1 - d) * 4 + nibble_bit;
      if (bit_from_right >= bit_count) {
        if (bit) throw ParameterError("hex value has bits beyond the declared length");
        continue;
      }
      out[bit_count - 1 - bit_from_right] = bit;
    }
  }
  return out;
}

namespace {

void require_doubling_sizes(const SecretSequence& secrets) {
  if (secrets.empty()) {
    throw ParameterError("need at least one secret");
  }
  if (secrets.size() > kMaxLevels) {
    throw ParameterError("too many levels: " + std::to_string(secrets.size()) + " > " +
                         std::to_string(kMaxLevels));
  }
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    const std::size_t expected = std::size_t{1} << i;
    if (secrets[i].size() != expected) {
      throw ParameterError("secret " + std::to_string(i + 1) + " must have " +
                           std::to_string(expected) + " bits, got " +
                           std::to_string(secrets[i].size()));
    }
  }
}

BitString left_half(const BitString& bits) {
  return BitString(bits.begin(), bits.begin() + bits.size() / 2);
}

BitString right_half(const BitString& bits) {
  return BitString(bits.begin() + bits.size() / 2, bits.end());
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SharePair split(const SecretSequence& secrets, RandomSource& rng) {
  require_doubling_sizes(secrets);

  const bool base = rng.next_u64() & 1;
  BitString share1 = {base};
  BitString share2 = {static_cast<bool>(base ^ secrets[0][0])};

  for (std::size_t level = 2; level <= secrets.size(); ++level) {
    const BitString& secret = secrets[level - 1];
    const BitString pad2 = xor_bits(share1, left_half(secret));
    const BitString pad1 = xor_bits(share2, right_half(secret));
    share1 = concat(share1, pad1);
    share2 = concat(pad2, share2);
  }
  return {std::move(share1), std::move(share2)};
}

SecretSequence reconstruct(const SharePair& pair, std::size_t levels) {
  if (levels < 1 || levels > kMaxLevels) {
    throw ParameterError("level count must be in 1.." + std::to_string(kMaxLevels));
  }
  const std::size_t expected = std::size_t{1} << (levels - 1);
  if (pair.share1.size() != expected || pair.share2.size() != expected) {
    throw ParameterError("shares for " + std::to_string(levels) + " levels must have " +
                         std::to_string(expected) + " bits, got " +
                         std::to_string(pair.share1.size()) + " and " +
                         std::to_string(pair.share2.size()));
  }

  SecretSequence secrets(levels);
  BitString share1 = pair.share1;
  BitString share2 = pair.share2;
  for (std::size_t level = levels; level >= 2; --level) {
    secrets[level - 1] = xor_bits(share1, share2);
    share1 = left_half(share1);
    share2 = right_half(share2);
  }
  secrets[0] = xor_bits(share1, share2);
  return secrets;
}

}  // namespace rss::xor2
