#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace rss {

inline constexpr std::size_t kSha256Bytes = 32;

std::array<std::uint8_t, kSha256Bytes> sha256(std::span<const std::uint8_t> data);

}  // namespace rss
