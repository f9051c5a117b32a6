#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rss/poly.hpp"
#include "rss/random.hpp"
#include "rss/shamir.hpp"

namespace rss::recursive {

using shamir::Share;

/// The k-2 auxiliary secrets nested inside the primary secret's shares,
/// in dealing order. Empty when k = 2.
using HiddenPayload = std::vector<FieldElement>;

/// (k, n) parameters for recursive dealing. On top of the threshold-scheme
/// constraints, the nesting chain samples polynomials at abscissae up to
/// 2k-3, so those must also stay distinct and canonical mod p.
struct Params {
  PrimeModulus p;
  std::uint32_t k;
  std::uint32_t n;

  Params(PrimeModulus p, std::uint32_t k, std::uint32_t n);

  shamir::Params threshold_params() const { return {p, k, n}; }
};

struct RecoveredSecrets {
  FieldElement primary;
  HiddenPayload hidden;
};

/// Builds the nesting chain: starting from the single point (1, y11), each
/// auxiliary secret s_i is interpolated together with the current points into
/// a polynomial of degree i, which is then sampled at the next i+1 abscissae
/// to become the points of the next level. Returns the k-1 points of the last
/// level, ready to be interpolated with the primary secret.
///
/// When `chain` is non-null it receives the per-level polynomials, one entry
/// per auxiliary secret.
std::vector<Point> chain_forward(const HiddenPayload& hidden, FieldElement y11,
                                 const Params& params, std::vector<Polynomial>* chain = nullptr);

/// Deals the primary secret into n shares with the k-2 auxiliary secrets
/// nested inside. Exactly one uniform draw (the chain seed) is consumed from
/// the random source per call.
///
/// When `polynomials` is non-null it receives the chain polynomials followed
/// by the final share polynomial (k-1 entries in total).
std::vector<Share> deal(FieldElement primary, const HiddenPayload& hidden, const Params& params,
                        RandomSource& rng, std::vector<Polynomial>* polynomials = nullptr);

/// Recovers the primary secret and all nested secrets from any k shares.
/// Shares beyond the threshold are verified against the reconstructed
/// polynomial; a mismatch means tampering (or transit damage) and raises
/// InconsistencyError. The hidden secrets come back re-indexed in dealing
/// order even though the chain yields them in reverse.
RecoveredSecrets reconstruct(std::span<const Share> shares, const Params& params);

}  // namespace rss::recursive
