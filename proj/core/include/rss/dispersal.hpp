#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rss/codec.hpp"
#include "rss/recursive.hpp"

namespace rss {

/// Deals a whole byte stream: chunks the message, nests the auxiliary payload
/// (prefixed by a sha256 digest of the message when requested) into the
/// hidden channel, and produces the n share files, one per abscissa k..k+n-1.
///
/// The hidden channel only exists for k >= 3 and a non-empty message; an
/// auxiliary payload or digest that cannot fit raises CapacityError.
std::vector<codec::RecursiveShareFile> split_message(std::span<const std::uint8_t> message,
                                                     std::span<const std::uint8_t> aux,
                                                     const recursive::Params& params,
                                                     bool embed_digest, RandomSource& rng);

struct ReconstructedMessage {
  std::vector<std::uint8_t> message;
  std::vector<std::uint8_t> aux;  // auxiliary payload, digest prefix stripped
  bool digest_embedded = false;
  bool digest_verified = false;
};

/// Recovers the message (and hidden payload) from any k share files.
/// Headers must agree across files; every share beyond the threshold is
/// verified chunk by chunk. With check_digest set, the embedded digest is
/// recomputed and compared, raising InconsistencyError on mismatch.
ReconstructedMessage reconstruct_message(std::span<const codec::RecursiveShareFile> shares,
                                         bool check_digest);

}  // namespace rss
