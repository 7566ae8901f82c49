#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sphgenus/linalg.hpp"

namespace sphgenus {

struct AffineForm {
  Vector linear;
  Rational constant;
  [[nodiscard]] Rational operator()(std::span<const Rational> x) const { return dot(linear, x) + constant; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// scale * Π factors(x). The empty product with scale 1 is the constant 1.
class WeightPoly {
 public:
  WeightPoly(std::size_t arity, Rational scale, std::vector<AffineForm> factors);
  static WeightPoly constant_one(std::size_t arity);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const Rational& scale() const { return scale_; }
  [[nodiscard]] const std::vector<AffineForm>& factors() const { return factors_; }
  /// Number of factors with a nonzero linear part.
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] bool is_constant_one() const { return factors_.empty() && scale_ == 1; }

  [[nodiscard]] Rational operator()(std::span<const Rational> x) const;

  /// x ↦ w(-x)
  [[nodiscard]] WeightPoly reflected() const;
  /// y ↦ w(M y + offset) where M has arity() rows.
  [[nodiscard]] WeightPoly pulled_back(const Matrix& m, const Vector& offset) const;

  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

 private:
  std::size_t arity_;
  Rational scale_;
  std::vector<AffineForm> factors_;
};

}  // namespace sphgenus
