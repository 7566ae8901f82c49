#include "sphgenus/counts.hpp"

#include <sstream>
#include <stdexcept>

namespace sphgenus {

namespace {

std::int64_t parity_sign(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

std::int64_t as_count(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

std::int64_t count_n(const Polytope& p, const ShiftedLattice& lattice) {
  return as_count(lattice_points(p, lattice).size());
}

std::int64_t count_n_interior(const Polytope& p, const ShiftedLattice& lattice) {
  return as_count(lattice_points(p, lattice, Containment::relative_interior).size());
}

std::int64_t count_n_prime(const Polytope& p, const ShiftedLattice& lattice) {
  return parity_sign(p.dim()) * count_n_interior(p, lattice);
}

Rational sum_s(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w) {
  Rational total;
  for (const auto& x : lattice_points(delta, lattice)) total += w(x);
  return total;
}

Rational sum_s_interior(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w) {
  Rational total;
  for (const auto& x : lattice_points(delta, lattice, Containment::relative_interior)) total += w(-x);
  return Rational(parity_sign(weight_degree(delta, w))) * total;
}

Rational sum_s_prime(const Polytope& delta, const ShiftedLattice& lattice, const WeightPoly& w) {
  return Rational(parity_sign(delta.dim() + weight_degree(delta, w))) * sum_s_interior(delta, lattice, w);
}

AffineSpan linear_span(const Polytope& p) {
  Matrix m = p.vertices();
  rref(m, p.ambient_dim());
  return AffineSpan{zero_vector(p.ambient_dim()), m};
}

std::size_t restricted_degree(const WeightPoly& w, const AffineSpan& span) {
  if (span.base.size() != w.arity()) throw std::invalid_argument("restricted_degree: arity mismatch");
  std::size_t d = 0;
  for (const auto& f : w.factors()) {
    for (const auto& dir : span.directions) {
      if (!dot(f.linear, dir).is_zero()) {
        ++d;
        break;
      }
    }
  }
  return d;
}

std::size_t weight_degree(const Polytope& delta, const WeightPoly& w) {
  return restricted_degree(w, linear_span(delta));
}

std::size_t itaka(const Polytope& delta, const WeightPoly& w) { return delta.dim() + weight_degree(delta, w); }

Rational UniPoly::operator()(const Rational& m) const {
  Rational v;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * m + *it;
  return v;
}

std::string UniPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << (coeffs[i].sign() < 0 ? " - " : " + ");
    else if (coeffs[i].sign() < 0) os << '-';
    Rational mag = abs(coeffs[i]);
    bool show = i == 0 || mag != 1;
    if (show) os << mag;
    if (i > 0) os << (show ? "*" : "") << "m" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

UniPoly interpolate_dilation(const std::function<Rational(std::int64_t)>& fn, std::size_t degree_bound) {
  const std::size_t n = degree_bound + 1;
  Matrix vander(n, Vector(n));
  Vector values(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational m(static_cast<std::int64_t>(i + 1));
    Rational pw = 1;
    for (std::size_t j = 0; j < n; ++j) {
      vander[i][j] = pw;
      pw *= m;
    }
    values[i] = fn(static_cast<std::int64_t>(i + 1));
  }
  auto c = solve(vander, values);
  if (!c) throw std::logic_error("interpolate_dilation: singular system");
  UniPoly poly{*c};
  while (!poly.coeffs.empty() && poly.coeffs.back().is_zero()) poly.coeffs.pop_back();
  for (std::size_t extra = n + 1; extra <= n + 2; ++extra) {
    auto m = static_cast<std::int64_t>(extra);
    if (poly(Rational(m)) != fn(m)) {
      throw std::domain_error("dilation function is not polynomial of the stated degree");
    }
  }
  return poly;
}

}  // namespace sphgenus
