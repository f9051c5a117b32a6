#include "rss/random.hpp"

#include <openssl/rand.h>

#include <cstring>

#include "rss/errors.hpp"

namespace rss {

std::uint64_t SystemRandomSource::next_u64() {
  unsigned char buf[sizeof(std::uint64_t)];
  if (RAND_bytes(buf, sizeof(buf)) != 1) {
    throw Error("system entropy source failed");
  }
  std::uint64_t word;
  std::memcpy(&word, buf, sizeof(word));
  return word;
}

std::uint64_t FixedSource::next_u64() {
  if (next_ >= words_.size()) {
    throw Error("fixed random source exhausted after " + std::to_string(words_.size()) +
                " words");
  }
  return words_[next_++];
}

}  // namespace rss
