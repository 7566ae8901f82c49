#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sphgenus/linalg.hpp"
#include "sphgenus/polytope.hpp"

namespace sphgenus {

/// shift + Λ′ where Λ′ is spanned by independent integer vectors in ℤ^r.
class ShiftedLattice {
 public:
  ShiftedLattice(std::size_t ambient_dim, std::vector<IntVector> basis, Vector shift);

  /// ℤ^r with zero shift.
  static ShiftedLattice standard(std::size_t ambient_dim);
  /// ℤ^r shifted by v.
  static ShiftedLattice standard(std::size_t ambient_dim, Vector shift);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t rank() const { return basis_.size(); }
  [[nodiscard]] const std::vector<IntVector>& basis() const { return basis_; }
  [[nodiscard]] const Vector& shift() const { return shift_; }

  /// Coordinates y with x = shift + Σ y_i b_i, if x lies in the rational span.
  [[nodiscard]] std::optional<Vector> coordinates(const Vector& x) const;
  [[nodiscard]] bool contains(const Vector& x) const;

  [[nodiscard]] ShiftedLattice with_shift(Vector shift) const;

  friend bool operator==(const ShiftedLattice&, const ShiftedLattice&) = default;

 private:
  std::size_t ambient_;
  std::vector<IntVector> basis_;
  Vector shift_;
  Matrix columns_;  // r x rank
};

/// Points of (shift + Λ′) in P or in its relative interior, sorted lexicographically.
std::vector<Vector> lattice_points(const Polytope& p, const ShiftedLattice& lattice,
                                   Containment mode = Containment::closed);

}  // namespace sphgenus
