#include "rss/digest.hpp"

#include <openssl/evp.h>

#include "rss/errors.hpp"

namespace rss {

std::array<std::uint8_t, kSha256Bytes> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, kSha256Bytes> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != kSha256Bytes) {
    throw Error("sha256 computation failed");
  }
  return out;
}

}  // namespace rss
