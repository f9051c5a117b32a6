#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rss/poly.hpp"
#include "rss/random.hpp"

namespace rss::shamir {

/// (k, n) threshold parameters. Abscissae 0..k-1 carry the secret and the
/// random points; shares live at k..k+n-1, so p must exceed k+n-1 for all of
/// them to stay distinct mod p.
struct Params {
  PrimeModulus p;
  std::uint32_t k;
  std::uint32_t n;

  Params(PrimeModulus p, std::uint32_t k, std::uint32_t n);
};

/// One participant's piece: a point on the dealing polynomial, abscissa in
/// k..k+n-1.
struct Share {
  FieldElement x;
  FieldElement y;

  bool operator==(const Share&) const = default;
};

/// Deals `secret` into n shares: draws k-1 uniform points at x=1..k-1, pins
/// the secret at x=0, interpolates the degree-(k-1) polynomial and samples it
/// at x=k..k+n-1.
std::vector<Share> split(FieldElement secret, const Params& params, RandomSource& rng);

/// Recovers the secret from any k shares (the first k after sorting by
/// abscissa). Surplus shares are not ignored: each must lie on the
/// interpolated polynomial, otherwise the share set has been tampered with.
FieldElement reconstruct(std::span<const Share> shares, const Params& params);

}  // namespace rss::shamir
