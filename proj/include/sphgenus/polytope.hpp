#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphgenus/linalg.hpp"

namespace sphgenus {

/// normal · x <= offset
struct Halfspace {
  Vector normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// normal · x == offset
struct Hyperplane {
  Vector normal;
  Rational offset;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// base + span(directions). Directions are kept in reduced echelon form and the
/// base is zero on their pivot columns, so equal spans compare equal.
struct AffineSpan {
  Vector base;
  std::vector<Vector> directions;
  [[nodiscard]] std::size_t dim() const { return directions.size(); }
  [[nodiscard]] bool contains(std::span<const Rational> x) const;
  friend bool operator==(const AffineSpan&, const AffineSpan&) = default;
};

enum class Containment { closed, relative_interior };

/// Nonempty bounded convex polytope with exact rational data.
///
/// Vertices are sorted lexicographically; inequalities are irredundant and
/// sorted; equalities cut out the affine span. Two polytopes compare equal iff
/// they are the same point set.
class Polytope {
 public:
  /// Convex hull of a nonempty finite point set.
  static Polytope hull(std::span<const Vector> points);
  /// Solution set of the constraints, or nullopt when empty.
  /// Throws std::invalid_argument if the set is unbounded.
  static std::optional<Polytope> from_constraints(std::size_t ambient_dim,
                                                  std::span<const Halfspace> inequalities,
                                                  std::span<const Hyperplane> equalities = {});
  static Polytope point(Vector p);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return span_.dim(); }
  [[nodiscard]] const std::vector<Vector>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  [[nodiscard]] const std::vector<Hyperplane>& equalities() const { return equalities_; }
  [[nodiscard]] const AffineSpan& affine_span() const { return span_; }
  [[nodiscard]] bool is_integral() const;

  [[nodiscard]] bool contains(std::span<const Rational> x,
                              Containment mode = Containment::closed) const;

  [[nodiscard]] Polytope translated(const Vector& v) const;
  /// m * P for m >= 0 (m = 0 gives the origin).
  [[nodiscard]] Polytope dilated(const Rational& m) const;
  [[nodiscard]] Polytope negated() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }
  friend std::strong_ordering operator<=>(const Polytope& a, const Polytope& b);

 private:
  Polytope() = default;

  std::size_t ambient_ = 0;
  std::vector<Vector> vertices_;
  std::vector<Halfspace> inequalities_;
  std::vector<Hyperplane> equalities_;
  AffineSpan span_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Every nonempty face including P itself, ordered by dimension then vertices.
std::vector<Polytope> faces(const Polytope& p);

/// Lebesgue volume; P must be full-dimensional.
Rational volume(const Polytope& p);

/// Vertex-index sets of all nonempty faces with their dimensions.
struct FaceLattice {
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> dims;
};
FaceLattice face_lattice(const Polytope& p);

}  // namespace sphgenus
