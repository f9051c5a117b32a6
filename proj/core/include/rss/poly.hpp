#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rss/field.hpp"

namespace rss {

struct Point {
  FieldElement x;
  FieldElement y;

  bool operator==(const Point&) const = default;
};

/// Dense polynomial over Z_p in coefficient form: coefficients()[j] is the
/// coefficient of x^j. Never empty; normalized so the trailing coefficient is
/// nonzero unless the polynomial is the single-element [0].
class Polynomial {
 public:
  /// Normalizes trailing zeros. All coefficients must share one modulus.
  explicit Polynomial(std::vector<FieldElement> coefficients);

  static Polynomial zero(PrimeModulus modulus);

  const std::vector<FieldElement>& coefficients() const { return coefficients_; }
  PrimeModulus modulus() const { return coefficients_.front().modulus(); }
  std::size_t degree() const { return coefficients_.size() - 1; }

  /// Horner evaluation at x, mod p.
  FieldElement evaluate(FieldElement x) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<FieldElement> coefficients_;
};

/// The unique polynomial of degree < points.size() passing through all the
/// points (Newton divided differences, expanded to coefficient form).
/// Duplicate abscissae are rejected: upstream they mean corrupted shares.
Polynomial interpolate(std::span<const Point> points);

}  // namespace rss
