#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rss/field.hpp"
#include "rss/recursive.hpp"
#include "rss/xor2.hpp"

namespace rss::codec {

/// Bytes per field element. With the default 61-bit prime every 7-byte
/// big-endian group is guaranteed to be a canonical residue.
inline constexpr std::size_t kChunkBytes = 7;
inline constexpr std::uint64_t kChunkLimit = std::uint64_t{1} << (8 * kChunkBytes);

/// A byte stream mapped onto field elements, 7 bytes per element, final
/// group zero-padded. original_length disambiguates the padding.
struct ChunkedMessage {
  std::vector<FieldElement> elements;
  std::uint64_t original_length = 0;
};

/// Requires p > 2^56 so every 7-byte group fits below the modulus.
ChunkedMessage encode_message(std::span<const std::uint8_t> bytes, PrimeModulus p);

std::vector<std::uint8_t> decode_message(const ChunkedMessage& chunked);

/// Spreads an auxiliary byte payload over the hidden channel: one length
/// element, then the payload in 7-byte elements, zero-padded to the full
/// chunk_count * (k-2) capacity and distributed round-robin so chunk c holds
/// stream elements c, c+chunk_count, c+2*chunk_count, ...
std::vector<recursive::HiddenPayload> pack_hidden_channel(std::span<const std::uint8_t> aux,
                                                          std::size_t chunk_count,
                                                          std::uint32_t k, PrimeModulus p);

std::vector<std::uint8_t> unpack_hidden_channel(
    const std::vector<recursive::HiddenPayload>& payloads);

enum class DigestAlgorithm : std::uint8_t { none, sha256 };

/// One share of a chunked message: the scheme parameters plus this share's
/// y value for every chunk. `y.size()` is the chunk count.
struct RecursiveShareFile {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t msglen = 0;
  std::uint64_t auxlen = 0;
  DigestAlgorithm digest = DigestAlgorithm::none;
  std::vector<std::uint64_t> y;

  bool operator==(const RecursiveShareFile&) const = default;
};

struct Xor2ShareFile {
  std::uint32_t levels = 0;
  std::uint32_t index = 0;  // 1 or 2
  xor2::BitString bits;

  bool operator==(const Xor2ShareFile&) const = default;
};

using ShareFile = std::variant<RecursiveShareFile, Xor2ShareFile>;

// Share-file format (byte-exact): UTF-8, LF line endings, ASCII decimals
// with no signs or leading zeros. Every line is LF-terminated.
//
//   RSS1
//   scheme=recursive
//   p=131
//   k=5
//   n=7
//   x=5
//   chunks=1
//   msglen=7
//   auxlen=0
//   digest=none
//   ---
//   <one decimal y value per chunk>
//
// The xor2 variant replaces the parameter block with `levels=` and
// `index=`, and carries one lowercase-hex bit-string line after `---`.
std::string serialize_share(const ShareFile& file);

/// Strict inverse of serialize_share: any deviation from the canonical form
/// (magic, key order, non-canonical decimals, line counts) is rejected.
ShareFile parse_share(std::string_view text);

}  // namespace rss::codec
