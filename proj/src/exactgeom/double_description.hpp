#pragma once

#include <cstddef>
#include <vector>

#include "sphgenus/linalg.hpp"

namespace sphgenus::detail {

/// Extreme rays of the cone {y : row . y >= 0 for every row}.
/// Rows must share a length d. Returns primitive integer rays in an unspecified order.
/// `pointed` is set to false (and nothing is returned) when the rows have rank < d.
struct ConeRays {
  bool pointed = true;
  std::vector<IntVector> rays;
};

ConeRays extreme_rays(const std::vector<IntVector>& rows, std::size_t d);

}  // namespace sphgenus::detail
