#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "sphgenus/lattice.hpp"
#include "sphgenus/polytope.hpp"
#include "sphgenus/weight_poly.hpp"

namespace sphgenus {

/// Finite integer combination of indicator functions of closed polytopes.
class ConvexChain {
 public:
  explicit ConvexChain(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static ConvexChain of(const Polytope& p, std::int64_t coefficient = 1);
  /// Indicator of the origin, the multiplicative unit.
  static ConvexChain unit(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] const std::map<Polytope, std::int64_t>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Σ coefficient · [x ∈ P]
  [[nodiscard]] std::int64_t operator()(std::span<const Rational> x) const;

  void add_term(const Polytope& p, std::int64_t coefficient);

  ConvexChain& operator+=(const ConvexChain& rhs);
  friend ConvexChain operator+(ConvexChain a, const ConvexChain& b) { return a += b; }
  friend ConvexChain operator-(const ConvexChain& a, const ConvexChain& b) { return a + (-b); }
  ConvexChain operator-() const;
  /// Convolution: bilinear extension of P, Q ↦ P + Q.
  friend ConvexChain operator*(const ConvexChain& a, const ConvexChain& b);
  friend ConvexChain operator*(std::int64_t s, const ConvexChain& c);

  [[nodiscard]] std::string str() const;

  /// Rewrites the chain over the cells of the hyperplane arrangement cut out
  /// by its own terms: Σ over relatively open cells C of c(C)·χ_C, each χ_C
  /// expanded through the faces of its closure. Zero-valued cells vanish, so
  /// for example χ_P * χ_P^{-1} normalizes to the single term χ_{0}.
  [[nodiscard]] ConvexChain normalized() const;

  /// Identical term maps.
  [[nodiscard]] bool same_terms(const ConvexChain& other) const {
    return ambient_ == other.ambient_ && terms_ == other.terms_;
  }

  /// Equality as functions on ℚ^r (exact).
  friend bool operator==(const ConvexChain& a, const ConvexChain& b);

 private:
  std::size_t ambient_;
  std::map<Polytope, std::int64_t> terms_;
};

/// Indicator of relint P written as Σ over faces F of (-1)^(dim P - dim F) χ_F.
ConvexChain relative_interior_chain(const Polytope& p);

/// Convolution inverse of χ_P: (-1)^dim P times the indicator of relint(-P).
ConvexChain inverse_of_polytope(const Polytope& p);

/// χ_P^{*m}; negative m uses the inverse of the dilate.
ConvexChain power(const Polytope& p, std::int64_t m);

/// Integral against the Euler characteristic.
std::int64_t euler_integral(const ConvexChain& c);

/// Σ over lattice points x of w(x) · c(x).
Rational weighted_lattice_sum(const ConvexChain& c, const ShiftedLattice& lattice, const WeightPoly& w);

}  // namespace sphgenus
