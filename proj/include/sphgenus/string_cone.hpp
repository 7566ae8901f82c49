#pragma once

#include <cstddef>
#include <vector>

#include "sphgenus/linalg.hpp"
#include "sphgenus/polytope.hpp"

namespace sphgenus {

/// Homogeneous cone {(λ, x) : row · (λ, x) >= 0} in ℚ^weight_dim × ℚ^fiber_dim.
struct StringCone {
  std::size_t weight_dim = 0;
  std::size_t fiber_dim = 0;
  std::vector<Vector> rows;
  friend bool operator==(const StringCone&, const StringCone&) = default;
};

/// Number of Gelfand-Zetlin coordinates below a top row of length n.
std::size_t gz_dimension(std::size_t n);

/// Interlacing cone for GL(n). Pattern rows t = 1..n-1 hold n-t entries each,
/// stored row by row; the entries y of row t and z of row t-1 satisfy
/// z_i <= y_i <= z_{i+1}.
StringCone gz_cone(std::size_t n);

/// Cone in (λ, x, y) with x a pattern over λ and y a pattern over the dual weight.
StringCone group_gz_cone(std::size_t n);

/// GZ polytope with top row λ. Throws "not dominant" unless λ is weakly increasing.
Polytope gz_polytope(std::size_t n, const Vector& lambda);

/// {(λ, x) : λ ∈ delta, (λ, x) in the cone}. Throws if the result is empty.
Polytope no_polytope(const Polytope& delta, const StringCone& cone);

}  // namespace sphgenus
