#include "rss/poly.hpp"

#include <algorithm>

namespace rss {

Polynomial::Polynomial(std::vector<FieldElement> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw ParameterError("polynomial needs at least one coefficient; the zero polynomial is [0]");
  }
  const PrimeModulus p = coefficients_.front().modulus();
  for (const FieldElement& c : coefficients_) {
    if (c.modulus() != p) {
      throw ParameterError("polynomial coefficients have mismatched moduli");
    }
  }
  while (coefficients_.size() > 1 && coefficients_.back().value() == 0) {
    coefficients_.pop_back();
  }
}

Polynomial Polynomial::zero(PrimeModulus modulus) {
  return Polynomial({FieldElement(0, modulus)});
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  if (x.modulus() != modulus()) {
    throw ParameterError("evaluation point modulus differs from polynomial modulus");
  }
  FieldElement acc = coefficients_.back();
  for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial interpolate(std::span<const Point> points) {
  if (points.empty()) {
    throw ParameterError("interpolation needs at least one point");
  }
  const PrimeModulus p = points.front().x.modulus();
  for (const Point& pt : points) {
    if (pt.x.modulus() != p || pt.y.modulus() != p) {
      throw ParameterError("interpolation points have mismatched moduli");
    }
  }
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i].x == points[j].x) {
        throw DuplicateAbscissaError("duplicate abscissa " + std::to_string(points[i].x.value()) +
                                     " in interpolation input");
      }
    }
  }

  // Newton divided differences: diffs[i] ends up holding the coefficient of
  // prod_{j<i} (x - x_j) in the Newton form.
  std::vector<FieldElement> diffs;
  diffs.reserve(m);
  for (const Point& pt : points) diffs.push_back(pt.y);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      FieldElement denom = points[i].x - points[i - level].x;
      diffs[i] = (diffs[i] - diffs[i - 1]) * denom.inverse();
    }
  }

  // Expand the Newton form to monomial coefficients by Horner on the basis:
  // result = (...(d_{m-1})(x - x_{m-2}) + d_{m-2})... (x - x_0) + d_0.
  const FieldElement zero(0, p);
  std::vector<FieldElement> coeffs = {diffs[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    coeffs.push_back(zero);
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
      coeffs[j] = coeffs[j - 1] - coeffs[j] * points[i].x;
    }
    coeffs[0] = zero - coeffs[0] * points[i].x;
    coeffs[0] = coeffs[0] + diffs[i];
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace rss
