#include "rss/dispersal.hpp"

#include <algorithm>

#include "rss/digest.hpp"

namespace rss {

std::vector<codec::RecursiveShareFile> split_message(std::span<const std::uint8_t> message,
                                                     std::span<const std::uint8_t> aux,
                                                     const recursive::Params& params,
                                                     bool embed_digest, RandomSource& rng) {
  const codec::ChunkedMessage chunked = codec::encode_message(message, params.p);
  const std::size_t chunk_count = chunked.elements.size();

  std::vector<std::uint8_t> channel;
  if (embed_digest) {
    const auto digest = sha256(message);
    channel.insert(channel.end(), digest.begin(), digest.end());
  }
  channel.insert(channel.end(), aux.begin(), aux.end());

  std::vector<recursive::HiddenPayload> payloads;
  if (params.k >= 3 && chunk_count > 0) {
    payloads = codec::pack_hidden_channel(channel, chunk_count, params.k, params.p);
  } else if (!channel.empty()) {
    throw CapacityError(channel.size() + codec::kChunkBytes, 0);
  } else {
    payloads.assign(chunk_count, recursive::HiddenPayload{});
  }

  std::vector<codec::RecursiveShareFile> files(params.n);
  for (std::uint32_t j = 0; j < params.n; ++j) {
    files[j].p = params.p.value();
    files[j].k = params.k;
    files[j].n = params.n;
    files[j].x = std::uint64_t{params.k} + j;
    files[j].msglen = chunked.original_length;
    files[j].auxlen = channel.size();
    files[j].digest = embed_digest ? codec::DigestAlgorithm::sha256 : codec::DigestAlgorithm::none;
    files[j].y.reserve(chunk_count);
  }

  for (std::size_t c = 0; c < chunk_count; ++c) {
    const std::vector<recursive::Share> shares =
        recursive::deal(chunked.elements[c], payloads[c], params, rng);
    for (std::uint32_t j = 0; j < params.n; ++j) {
      files[j].y.push_back(shares[j].y.value());
    }
  }
  return files;
}

namespace {

void require_matching_headers(std::span<const codec::RecursiveShareFile> shares) {
  const codec::RecursiveShareFile& first = shares.front();
  for (const codec::RecursiveShareFile& s : shares.subspan(1)) {
    const bool match = s.p == first.p && s.k == first.k && s.n == first.n &&
                       s.msglen == first.msglen && s.auxlen == first.auxlen &&
                       s.digest == first.digest && s.y.size() == first.y.size();
    if (!match) {
      throw ParameterError("share files disagree on scheme parameters");
    }
  }
}

}  // namespace

ReconstructedMessage reconstruct_message(std::span<const codec::RecursiveShareFile> shares,
                                         bool check_digest) {
  if (shares.empty()) {
    throw InsufficientSharesError("no share files given");
  }
  require_matching_headers(shares);
  const codec::RecursiveShareFile& first = shares.front();
  const recursive::Params params(PrimeModulus(first.p), first.k, first.n);
  const std::size_t chunk_count = first.y.size();

  if (check_digest && first.digest == codec::DigestAlgorithm::none) {
    throw ParameterError("digest verification requested but no digest is embedded");
  }

  for (const codec::RecursiveShareFile& s : shares) {
    if (s.x < params.k || s.x > std::uint64_t{params.k} + params.n - 1) {
      throw ParameterError("share abscissa " + std::to_string(s.x) + " outside k..k+n-1");
    }
    for (std::uint64_t y : s.y) {
      if (y >= params.p.value()) {
        throw CorruptionError("share value " + std::to_string(y) + " not a residue mod " +
                              std::to_string(params.p.value()));
      }
    }
  }
  // Duplicate abscissae surface via recursive::reconstruct; an empty message
  // (zero chunks) never reaches it, so check here as well.
  {
    std::vector<std::uint64_t> xs;
    xs.reserve(shares.size());
    for (const codec::RecursiveShareFile& s : shares) xs.push_back(s.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
      throw DuplicateAbscissaError("two share files claim the same abscissa");
    }
  }
  if (shares.size() < params.k) {
    throw InsufficientSharesError("got " + std::to_string(shares.size()) +
                                  " share files, need " + std::to_string(params.k));
  }

  const bool has_channel = params.k >= 3 && chunk_count > 0;
  if (!has_channel && first.auxlen != 0) {
    throw CorruptionError("share header claims a hidden payload the scheme cannot carry");
  }

  codec::ChunkedMessage chunked;
  chunked.original_length = first.msglen;
  chunked.elements.reserve(chunk_count);
  std::vector<recursive::HiddenPayload> payloads;
  payloads.reserve(chunk_count);

  std::vector<recursive::Share> chunk_shares;
  for (std::size_t c = 0; c < chunk_count; ++c) {
    chunk_shares.clear();
    for (const codec::RecursiveShareFile& s : shares) {
      chunk_shares.push_back(
          {FieldElement(s.x, params.p), FieldElement(s.y[c], params.p)});
    }
    recursive::RecoveredSecrets recovered = recursive::reconstruct(chunk_shares, params);
    chunked.elements.push_back(recovered.primary);
    payloads.push_back(std::move(recovered.hidden));
  }

  ReconstructedMessage out;
  out.message = codec::decode_message(chunked);
  out.digest_embedded = first.digest == codec::DigestAlgorithm::sha256;

  std::vector<std::uint8_t> channel;
  if (has_channel) {
    channel = codec::unpack_hidden_channel(payloads);
    if (channel.size() != first.auxlen) {
      throw CorruptionError("hidden payload length " + std::to_string(channel.size()) +
                            " disagrees with share header auxlen " +
                            std::to_string(first.auxlen));
    }
  }

  if (out.digest_embedded) {
    if (channel.size() < kSha256Bytes) {
      throw CorruptionError("hidden channel too short to hold the embedded digest");
    }
    if (check_digest) {
      const auto expected = sha256(out.message);
      if (!std::equal(expected.begin(), expected.end(), channel.begin())) {
        throw InconsistencyError("embedded digest does not match the reconstructed message");
      }
      out.digest_verified = true;
    }
    out.aux.assign(channel.begin() + kSha256Bytes, channel.end());
  } else {
    out.aux = std::move(channel);
  }
  return out;
}

}  // namespace rss
