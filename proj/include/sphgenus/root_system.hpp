#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sphgenus/linalg.hpp"
#include "sphgenus/polytope.hpp"
#include "sphgenus/weight_poly.hpp"

namespace sphgenus {

/// Positive roots in ℚ^r with a symmetric pairing (identity by default).
///
/// Type A uses the increasing convention: λ is dominant iff
/// λ_1 <= λ_2 <= ... <= λ_n, and the positive roots are e_j - e_i for i < j.
class RootSystem {
 public:
  RootSystem(std::size_t rank_ambient, std::vector<Vector> positive_roots, Matrix pairing);
  /// Identity pairing.
  RootSystem(std::size_t rank_ambient, std::vector<Vector> positive_roots);

  static RootSystem type_a(std::size_t n);

  [[nodiscard]] std::size_t rank_ambient() const { return rank_; }
  [[nodiscard]] const std::vector<Vector>& positive_roots() const { return roots_; }
  [[nodiscard]] const Vector& rho() const { return rho_; }
  [[nodiscard]] const Matrix& pairing() const { return pairing_; }
  /// n for the built-in GL(n) system.
  [[nodiscard]] std::optional<std::size_t> type_a_rank() const { return type_a_; }

  [[nodiscard]] Rational pair(const Vector& a, const Vector& b) const;
  [[nodiscard]] bool is_dominant(const Vector& lambda) const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;

 private:
  std::size_t rank_;
  std::vector<Vector> roots_;
  Matrix pairing_;
  Vector rho_;
  std::optional<std::size_t> type_a_;
};

/// f(λ) = Π ⟨λ+ρ, α⟩ / ⟨ρ, α⟩ over positive roots.
WeightPoly weyl_polynomial(const RootSystem& rs);

/// Orbit of λ under the reflections in the positive roots, sorted.
std::vector<Vector> weyl_orbit(const RootSystem& rs, const Vector& lambda);

struct WeightPolytopes {
  Polytope full;      // hull of the orbits
  Polytope dominant;  // intersection with the dominant chamber
};

/// Throws std::invalid_argument "not dominant" for a non-dominant weight.
WeightPolytopes weight_polytope(const RootSystem& rs, const std::vector<Vector>& highest_weights);

/// λ ↦ -w0 λ for type A: (-λ_n, ..., -λ_1).
Vector dual_weight(const Vector& lambda);

}  // namespace sphgenus
