#include "rss/shamir.hpp"

#include <algorithm>

namespace rss::shamir {

Params::Params(PrimeModulus p, std::uint32_t k, std::uint32_t n) : p(p), k(k), n(n) {
  if (k < 2 || k > n) {
    throw ParameterError("threshold must satisfy 2 <= k <= n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n));
  }
  if (p.value() <= std::uint64_t{k} + n - 1) {
    throw ParameterError("modulus " + std::to_string(p.value()) +
                         " too small: need p > k+n-1 = " + std::to_string(std::uint64_t{k} + n - 1));
  }
}

std::vector<Share> split(FieldElement secret, const Params& params, RandomSource& rng) {
  if (secret.modulus() != params.p) {
    throw ParameterError("secret modulus differs from scheme modulus");
  }
  std::vector<Point> points;
  points.reserve(params.k);
  points.push_back({FieldElement(0, params.p), secret});
  for (std::uint32_t i = 1; i < params.k; ++i) {
    points.push_back({FieldElement(i, params.p), sample_uniform(params.p, rng)});
  }
  const Polynomial poly = interpolate(points);

  std::vector<Share> shares;
  shares.reserve(params.n);
  for (std::uint32_t i = params.k; i <= params.k + params.n - 1; ++i) {
    FieldElement x(i, params.p);
    shares.push_back({x, poly.evaluate(x)});
  }
  return shares;
}

FieldElement reconstruct(std::span<const Share> shares, const Params& params) {
  if (shares.size() < params.k) {
    throw InsufficientSharesError("got " + std::to_string(shares.size()) + " shares, need " +
                                  std::to_string(params.k));
  }
  std::vector<Share> sorted(shares.begin(), shares.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Share& a, const Share& b) { return a.x.value() < b.x.value(); });
  for (const Share& s : sorted) {
    if (s.x.modulus() != params.p || s.y.modulus() != params.p) {
      throw ParameterError("share modulus differs from scheme modulus");
    }
    if (s.x.value() < params.k || s.x.value() > std::uint64_t{params.k} + params.n - 1) {
      throw ParameterError("share abscissa " + std::to_string(s.x.value()) +
                           " outside k..k+n-1");
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].x == sorted[i - 1].x) {
      throw DuplicateAbscissaError("duplicate share abscissa " +
                                   std::to_string(sorted[i].x.value()));
    }
  }

  std::vector<Point> points;
  points.reserve(params.k);
  for (std::uint32_t i = 0; i < params.k; ++i) {
    points.push_back({sorted[i].x, sorted[i].y});
  }
  const Polynomial poly = interpolate(points);
  for (std::size_t i = params.k; i < sorted.size(); ++i) {
    if (poly.evaluate(sorted[i].x) != sorted[i].y) {
      throw InconsistencyError("share at x=" + std::to_string(sorted[i].x.value()) +
                               " does not lie on the reconstructed polynomial");
    }
  }
  return poly.evaluate(FieldElement(0, params.p));
}

}  // namespace rss::shamir
