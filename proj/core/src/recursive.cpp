#include "rss/recursive.hpp"

#include <algorithm>
#include <cassert>

namespace rss::recursive {

Params::Params(PrimeModulus p, std::uint32_t k, std::uint32_t n) : p(p), k(k), n(n) {
  if (k < 2 || k > n) {
    throw ParameterError("threshold must satisfy 2 <= k <= n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n));
  }
  if (p.value() <= std::uint64_t{k} + n - 1) {
    throw ParameterError("modulus " + std::to_string(p.value()) +
                         " too small: need p > k+n-1 = " + std::to_string(std::uint64_t{k} + n - 1));
  }
  if (k >= 3 && p.value() <= std::uint64_t{2} * k - 3) {
    throw ParameterError("modulus " + std::to_string(p.value()) +
                         " too small: need p > 2k-3 = " + std::to_string(std::uint64_t{2} * k - 3));
  }
}

namespace {

void require_payload_shape(const HiddenPayload& hidden, const Params& params) {
  if (hidden.size() != std::size_t{params.k} - 2) {
    throw ParameterError("hidden payload must hold exactly k-2 = " +
                         std::to_string(params.k - 2) + " elements, got " +
                         std::to_string(hidden.size()));
  }
  for (const FieldElement& s : hidden) {
    if (s.modulus() != params.p) {
      throw ParameterError("hidden secret modulus differs from scheme modulus");
    }
  }
}

}  // namespace

std::vector<Point> chain_forward(const HiddenPayload& hidden, FieldElement y11,
                                 const Params& params, std::vector<Polynomial>* chain) {
  require_payload_shape(hidden, params);
  if (y11.modulus() != params.p) {
    throw ParameterError("chain seed modulus differs from scheme modulus");
  }
  if (chain) chain->clear();

  const PrimeModulus p = params.p;
  std::vector<Point> points = {{FieldElement(1, p), y11}};
  for (std::uint32_t level = 1; level + 1 < params.k; ++level) {
    const FieldElement& secret = hidden[level - 1];

    std::vector<Point> anchor;
    anchor.reserve(points.size() + 1);
    anchor.push_back({FieldElement(0, p), secret});
    anchor.insert(anchor.end(), points.begin(), points.end());
    const Polynomial poly = interpolate(anchor);
    assert(poly.evaluate(FieldElement(0, p)) == secret);
    if (chain) chain->push_back(poly);

    // The next level's points: sample past the current abscissae, then shift
    // back so they line up at x = 1..level+1 again.
    std::vector<Point> next;
    next.reserve(level + 1);
    for (std::uint32_t j = 1; j <= level + 1; ++j) {
      FieldElement sample_x(j + level, p);
      next.push_back({FieldElement(j, p), poly.evaluate(sample_x)});
    }
    points = std::move(next);
  }
  return points;
}

std::vector<Share> deal(FieldElement primary, const HiddenPayload& hidden, const Params& params,
                        RandomSource& rng, std::vector<Polynomial>* polynomials) {
  if (primary.modulus() != params.p) {
    throw ParameterError("secret modulus differs from scheme modulus");
  }
  require_payload_shape(hidden, params);

  const FieldElement y11 = sample_uniform(params.p, rng);
  std::vector<Point> points = chain_forward(hidden, y11, params, polynomials);

  std::vector<Point> anchor;
  anchor.reserve(params.k);
  anchor.push_back({FieldElement(0, params.p), primary});
  anchor.insert(anchor.end(), points.begin(), points.end());
  const Polynomial master = interpolate(anchor);
  if (polynomials) polynomials->push_back(master);

  std::vector<Share> shares;
  shares.reserve(params.n);
  for (std::uint32_t i = params.k; i <= params.k + params.n - 1; ++i) {
    FieldElement x(i, params.p);
    shares.push_back({x, master.evaluate(x)});
  }
  return shares;
}

RecoveredSecrets reconstruct(std::span<const Share> shares, const Params& params) {
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
  Polynomial current = interpolate(points);
  for (std::size_t i = params.k; i < sorted.size(); ++i) {
    if (current.evaluate(sorted[i].x) != sorted[i].y) {
      throw InconsistencyError("share at x=" + std::to_string(sorted[i].x.value()) +
                               " does not lie on the reconstructed polynomial");
    }
  }

  const PrimeModulus p = params.p;
  RecoveredSecrets out{current.evaluate(FieldElement(0, p)), {}};
  out.hidden.reserve(params.k - 2);

  // Unwind the chain: the current polynomial interpolates the previous
  // level's samples at x = 1..level+1, which the dealer took at abscissae
  // level+1..2*level+1. Re-anchor them there and interpolate the previous
  // polynomial; its value at 0 is that level's nested secret.
  for (std::uint32_t level = params.k - 2; level >= 1; --level) {
    std::vector<Point> prev;
    prev.reserve(level + 1);
    for (std::uint32_t j = 1; j <= level + 1; ++j) {
      FieldElement value = current.evaluate(FieldElement(j, p));
      prev.push_back({FieldElement(level + j, p), value});
    }
    current = interpolate(prev);
    out.hidden.push_back(current.evaluate(FieldElement(0, p)));
  }
  // The chain yields s_{k-2} first; callers expect dealing order.
  std::reverse(out.hidden.begin(), out.hidden.end());
  return out;
}

}  // namespace rss::recursive
