#include "sphgenus/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sphgenus {

namespace {

Matrix identity(std::size_t n) {
  Matrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

constexpr std::size_t kOrbitLimit = 200000;

}  // namespace

RootSystem::RootSystem(std::size_t rank_ambient, std::vector<Vector> positive_roots, Matrix pairing)
    : rank_(rank_ambient), roots_(std::move(positive_roots)), pairing_(std::move(pairing)) {
  if (pairing_.size() != rank_) throw std::invalid_argument("pairing matrix has wrong size");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (pairing_[i].size() != rank_) throw std::invalid_argument("pairing matrix has wrong size");
    for (std::size_t j = 0; j < i; ++j) {
      if (pairing_[i][j] != pairing_[j][i]) throw std::invalid_argument("pairing matrix is not symmetric");
    }
  }
  rho_ = zero_vector(rank_);
  for (const auto& a : roots_) {
    if (a.size() != rank_) throw std::invalid_argument("root has wrong dimension");
    if (is_zero(a)) throw std::invalid_argument("zero vector given as a root");
    rho_ = rho_ + a;
  }
  rho_ = Rational(1, 2) * rho_;
  for (const auto& a : roots_) {
    if (pair(rho_, a).sign() <= 0) {
      throw std::invalid_argument("root system invalid: <rho, alpha> must be positive for every positive root");
    }
  }
}

RootSystem::RootSystem(std::size_t rank_ambient, std::vector<Vector> positive_roots)
    : RootSystem(rank_ambient, std::move(positive_roots), identity(rank_ambient)) {}

RootSystem RootSystem::type_a(std::size_t n) {
  if (n < 1) throw std::invalid_argument("type A root system needs n >= 1");
  std::vector<Vector> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector a = zero_vector(n);
      a[j] = 1;
      a[i] = -1;
      roots.push_back(std::move(a));
    }
  }
  RootSystem rs(n, std::move(roots));
  rs.type_a_ = n;
  return rs;
}

Rational RootSystem::pair(const Vector& a, const Vector& b) const {
  if (a.size() != rank_ || b.size() != rank_) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (!b[j].is_zero() && !pairing_[i][j].is_zero()) s += a[i] * pairing_[i][j] * b[j];
    }
  }
  return s;
}

bool RootSystem::is_dominant(const Vector& lambda) const {
  return std::all_of(roots_.begin(), roots_.end(), [&](const Vector& a) { return pair(lambda, a).sign() >= 0; });
}

WeightPoly weyl_polynomial(const RootSystem& rs) {
  std::vector<AffineForm> factors;
  Rational denom = 1;
  const std::size_t r = rs.rank_ambient();
  for (const auto& a : rs.positive_roots()) {
    Rational c = rs.pair(rs.rho(), a);
    if (c.is_zero()) throw std::invalid_argument("Weyl denominator vanishes: <rho, alpha> = 0");
    Vector lin = zero_vector(r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) lin[j] += rs.pairing()[j][i] * a[i];
    }
    factors.push_back({lin, c});
    denom *= c;
  }
  return WeightPoly(r, Rational(1) / denom, std::move(factors));
}

std::vector<Vector> weyl_orbit(const RootSystem& rs, const Vector& lambda) {
  if (lambda.size() != rs.rank_ambient()) throw std::invalid_argument("weyl_orbit: dimension mismatch");
  std::set<Vector> seen{lambda};
  std::deque<Vector> queue{lambda};
  while (!queue.empty()) {
    Vector x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.positive_roots()) {
      Rational aa = rs.pair(a, a);
      if (aa.is_zero()) throw std::invalid_argument("weyl_orbit: isotropic root");
      Rational c = Rational(2) * rs.pair(x, a) / aa;
      if (c.is_zero()) continue;
      Vector y = x - c * a;
      if (seen.insert(y).second) {
        if (seen.size() > kOrbitLimit) throw std::invalid_argument("weyl_orbit: orbit too large (not a finite reflection group?)");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

WeightPolytopes weight_polytope(const RootSystem& rs, const std::vector<Vector>& highest_weights) {
  if (highest_weights.empty()) throw std::invalid_argument("weight_polytope: no highest weights");
  std::vector<Vector> pts;
  for (const auto& w : highest_weights) {
    if (w.size() != rs.rank_ambient()) throw std::invalid_argument("weight_polytope: dimension mismatch");
    if (!rs.is_dominant(w)) throw std::invalid_argument("not dominant");
    auto orbit = weyl_orbit(rs, w);
    pts.insert(pts.end(), orbit.begin(), orbit.end());
  }
  Polytope full = Polytope::hull(pts);
  std::vector<Halfspace> ineqs = full.inequalities();
  const std::size_t r = rs.rank_ambient();
  for (const auto& a : rs.positive_roots()) {
    Vector lin = zero_vector(r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) lin[j] += rs.pairing()[j][i] * a[i];
    }
    ineqs.push_back({-lin, 0});
  }
  auto dominant = Polytope::from_constraints(r, ineqs, full.equalities());
  if (!dominant) throw std::logic_error("weight_polytope: empty dominant part");
  return {std::move(full), std::move(*dominant)};
}

Vector dual_weight(const Vector& lambda) {
  Vector out(lambda.rbegin(), lambda.rend());
  return -out;
}

}  // namespace sphgenus
