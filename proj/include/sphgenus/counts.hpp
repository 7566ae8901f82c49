#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sphgenus/lattice.hpp"
#include "sphgenus/polytope.hpp"
#include "sphgenus/weight_poly.hpp"

namespace sphgenus {

/// |P ∩ L|
std::int64_t count_n(const Polytope& p, const ShiftedLattice& lattice);
/// |relint P ∩ L|
std::int64_t count_n_interior(const Polytope& p, const ShiftedLattice& lattice);
/// (-1)^dim P · |relint P ∩ L|
std::int64_t count_n_prime(const Polytope& p, const ShiftedLattice& lattice);

/// Σ_{λ ∈ Δ ∩ L} w(λ)
Rational sum_s(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w);
/// (-1)^{d_Δ} Σ_{λ ∈ relint Δ ∩ L} w(-λ)
Rational sum_s_interior(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w);
/// (-1)^{dim Δ + d_Δ} · sum_s_interior
Rational sum_s_prime(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w);

/// Linear span of the vertices, as an AffineSpan through the origin.
AffineSpan linear_span(const Polytope& p);

/// Number of affine factors of w that are non-constant along the span.
std::size_t restricted_degree(const WeightPoly& w, const AffineSpan& span);

/// d_Δ: restricted degree of w on the linear span of Δ.
std::size_t weight_degree(const Polytope& delta, const WeightPoly& w);

/// dim Δ + d_Δ
std::size_t itaka(const Polytope& delta, const WeightPoly& w);

/// Polynomial in one variable, coefficients in increasing degree.
struct UniPoly {
  std::vector<Rational> coeffs;
  [[nodiscard]] Rational operator()(const Rational& m) const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Fits fn on m = 1..degree_bound+1 and checks m = degree_bound+2, +3 exactly.
/// Throws std::domain_error "dilation function is not polynomial of the stated degree".
UniPoly interpolate_dilation(const std::function<Rational(std::int64_t)>& fn, std::size_t degree_bound);

}  // namespace sphgenus
