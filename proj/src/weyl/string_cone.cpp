#include "sphgenus/string_cone.hpp"

#include <stdexcept>

namespace sphgenus {

namespace {

/// Interlacing rows for one pattern whose top row is given by linear forms
/// on the full coordinate vector; pattern entries start at `offset`.
void add_pattern_rows(std::vector<Vector>& rows, std::size_t total, const std::vector<Vector>& top,
                      std::size_t offset) {
  const std::size_t n = top.size();
  std::vector<Vector> prev = top;
  std::size_t pos = offset;
  for (std::size_t t = 1; t < n; ++t) {
    std::vector<Vector> cur;
    for (std::size_t i = 0; i + t < n; ++i) cur.push_back(unit_vector(total, pos++));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      rows.push_back(cur[i] - prev[i]);
      rows.push_back(prev[i + 1] - cur[i]);
    }
    prev = std::move(cur);
  }
}

}  // namespace

std::size_t gz_dimension(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

StringCone gz_cone(std::size_t n) {
  StringCone cone;
  cone.weight_dim = n;
  cone.fiber_dim = gz_dimension(n);
  const std::size_t total = n + cone.fiber_dim;
  std::vector<Vector> top;
  for (std::size_t i = 0; i < n; ++i) top.push_back(unit_vector(total, i));
  add_pattern_rows(cone.rows, total, top, n);
  return cone;
}

StringCone group_gz_cone(std::size_t n) {
  StringCone cone;
  const std::size_t big_n = gz_dimension(n);
  cone.weight_dim = n;
  cone.fiber_dim = 2 * big_n;
  const std::size_t total = n + 2 * big_n;
  std::vector<Vector> top, dual_top;
  for (std::size_t i = 0; i < n; ++i) {
    top.push_back(unit_vector(total, i));
    dual_top.push_back(-unit_vector(total, n - 1 - i));
  }
  add_pattern_rows(cone.rows, total, top, n);
  add_pattern_rows(cone.rows, total, dual_top, n + big_n);
  return cone;
}

Polytope gz_polytope(std::size_t n, const Vector& lambda) {
  if (lambda.size() != n) throw std::invalid_argument("gz_polytope: lambda must have n entries");
  for (std::size_t i = 1; i < n; ++i) {
    if (lambda[i] < lambda[i - 1]) throw std::invalid_argument("not dominant");
  }
  StringCone cone = gz_cone(n);
  std::vector<Halfspace> ineqs;
  for (const auto& row : cone.rows) {
    Rational weight_part = dot(std::span<const Rational>(row).first(n), lambda);
    Vector fiber(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    ineqs.push_back({-fiber, weight_part});
  }
  auto p = Polytope::from_constraints(cone.fiber_dim, ineqs);
  if (!p) throw std::logic_error("gz_polytope: empty pattern set");
  return *p;
}

Polytope no_polytope(const Polytope& delta, const StringCone& cone) {
  if (delta.ambient_dim() != cone.weight_dim) {
    throw std::invalid_argument("no_polytope: moment polytope and string cone dimensions differ");
  }
  const std::size_t total = cone.weight_dim + cone.fiber_dim;
  auto pad = [&](const Vector& v) {
    Vector out = zero_vector(total);
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  std::vector<Halfspace> ineqs;
  std::vector<Hyperplane> eqs;
  for (const auto& h : delta.inequalities()) ineqs.push_back({pad(h.normal), h.offset});
  for (const auto& h : delta.equalities()) eqs.push_back({pad(h.normal), h.offset});
  for (const auto& row : cone.rows) {
    if (row.size() != total) throw std::invalid_argument("no_polytope: string cone row has wrong length");
    ineqs.push_back({-row, 0});
  }
  auto p = Polytope::from_constraints(total, ineqs, eqs);
  if (!p) throw std::invalid_argument("no_polytope: empty Newton-Okounkov polytope");
  return *p;
}

}  // namespace sphgenus
