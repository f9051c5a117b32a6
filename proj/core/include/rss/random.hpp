#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rss {

/// Source of uniform 64-bit words. Instances are not thread-safe; each thread
/// of work owns its own stream.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
};

/// OS-entropy-backed source for production dealing.
class SystemRandomSource final : public RandomSource {
 public:
  std::uint64_t next_u64() override;
};

/// Deterministic stream seeded from a 64-bit value. Not cryptographic; exists
/// so that share creation can be replayed (tests, `--seed`).
class SeededRandomSource final : public RandomSource {
 public:
  explicit SeededRandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Replays a fixed list of words, then throws. Lets tests inject the exact
/// random choices of a known dealing transcript.
class FixedSource final : public RandomSource {
 public:
  explicit FixedSource(std::vector<std::uint64_t> words) : words_(std::move(words)) {}

  std::uint64_t next_u64() override;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t next_ = 0;
};

}  // namespace rss
