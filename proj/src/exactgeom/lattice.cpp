#include "sphgenus/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sphgenus {

namespace {

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

__int128 ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

struct IntConstraint {
  IntVector c;  // c . y <= e
  std::int64_t e;
};

}  // namespace

ShiftedLattice::ShiftedLattice(std::size_t ambient_dim, std::vector<IntVector> basis, Vector shift)
    : ambient_(ambient_dim), basis_(std::move(basis)), shift_(std::move(shift)) {
  if (shift_.size() != ambient_) throw std::invalid_argument("lattice shift has wrong dimension");
  Matrix rows;
  for (const auto& b : basis_) {
    if (b.size() != ambient_) throw std::invalid_argument("lattice basis vector has wrong dimension");
    rows.push_back(to_vector(b));
  }
  if (sphgenus::rank(rows, ambient_) != basis_.size()) {
    throw std::invalid_argument("lattice basis vectors are linearly dependent");
  }
  columns_.assign(ambient_, Vector(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (std::size_t i = 0; i < ambient_; ++i) columns_[i][j] = basis_[j][i];
  }
}

ShiftedLattice ShiftedLattice::standard(std::size_t ambient_dim) {
  return standard(ambient_dim, zero_vector(ambient_dim));
}

ShiftedLattice ShiftedLattice::standard(std::size_t ambient_dim, Vector shift) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return ShiftedLattice(ambient_dim, std::move(basis), std::move(shift));
}

std::optional<Vector> ShiftedLattice::coordinates(const Vector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("lattice coordinates: dimension mismatch");
  Vector rhs = x - shift_;
  if (basis_.empty()) {
    if (is_zero(rhs)) return Vector{};
    return std::nullopt;
  }
  return solve(columns_, rhs);
}

bool ShiftedLattice::contains(const Vector& x) const {
  auto y = coordinates(x);
  return y && is_integral(*y);
}

ShiftedLattice ShiftedLattice::with_shift(Vector shift) const {
  return ShiftedLattice(ambient_, basis_, std::move(shift));
}

std::vector<Vector> lattice_points(const Polytope& p, const ShiftedLattice& lattice, Containment mode) {
  if (p.ambient_dim() != lattice.ambient_dim()) {
    throw std::invalid_argument("lattice_points: ambient dimension mismatch");
  }
  const std::size_t m = lattice.rank();
  const Vector& shift = lattice.shift();
  if (m == 0) {
    if (p.contains(shift, mode)) return {shift};
    return {};
  }
  const auto& basis = lattice.basis();
  auto image = [&](const Vector& a) {
    Vector c(m);
    for (std::size_t j = 0; j < m; ++j) c[j] = dot(a, to_vector(basis[j]));
    return c;
  };

  // Constraints in lattice coordinates.
  std::vector<Halfspace> y_ineqs;
  std::vector<Hyperplane> y_eqs;
  for (const auto& h : p.inequalities()) y_ineqs.push_back({image(h.normal), h.offset - dot(h.normal, shift)});
  for (const auto& h : p.equalities()) y_eqs.push_back({image(h.normal), h.offset - dot(h.normal, shift)});

  // Bounding box from the preimage polytope.
  std::vector<Vector> y_verts;
  bool inside = true;
  for (const auto& v : p.vertices()) {
    auto y = lattice.coordinates(v);
    if (!y) {
      inside = false;
      break;
    }
    y_verts.push_back(*y);
  }
  if (!inside) {
    auto pre = Polytope::from_constraints(m, y_ineqs, y_eqs);
    if (!pre) return {};
    y_verts = pre->vertices();
  }
  std::vector<std::int64_t> lo(m, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> hi(m, std::numeric_limits<std::int64_t>::min());
  for (const auto& y : y_verts) {
    for (std::size_t j = 0; j < m; ++j) {
      lo[j] = std::min(lo[j], y[j].ceil());
      hi[j] = std::max(hi[j], y[j].floor());
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (lo[j] > hi[j]) return {};
  }

  std::vector<std::vector<IntConstraint>> by_last(m);
  auto add = [&](const Vector& c, const Rational& e, bool strict) -> bool {
    std::int64_t l = e.den();
    for (const auto& x : c) l = lcm64(l, x.den());
    IntVector ci(m);
    std::size_t last = m;
    for (std::size_t j = 0; j < m; ++j) {
      ci[j] = narrow_checked(static_cast<__int128>(c[j].num()) * (l / c[j].den()));
      if (ci[j] != 0) last = j;
    }
    Rational scaled = e * Rational(l);
    std::int64_t bound = strict ? scaled.ceil() - 1 : scaled.floor();
    if (last == m) return bound >= 0;
    by_last[last].push_back({std::move(ci), bound});
    return true;
  };
  const bool strict = mode == Containment::relative_interior;
  for (const auto& h : y_ineqs) {
    if (!add(h.normal, h.offset, strict)) return {};
  }
  for (const auto& h : y_eqs) {
    if (!add(h.normal, h.offset, false) || !add(-h.normal, -h.offset, false)) return {};
  }

  std::vector<Vector> out;
  IntVector y(m, 0);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == m) {
      Vector x = shift;
      for (std::size_t j = 0; j < m; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (basis[j][i] != 0) x[i] += Rational(narrow_checked(static_cast<__int128>(y[j]) * basis[j][i]));
        }
      }
      out.push_back(std::move(x));
      return;
    }
    __int128 a = lo[k];
    __int128 b = hi[k];
    for (const auto& con : by_last[k]) {
      __int128 rest = con.e;
      for (std::size_t j = 0; j < k; ++j) rest -= static_cast<__int128>(con.c[j]) * y[j];
      if (con.c[k] > 0) b = std::min(b, floor_div(rest, con.c[k]));
      else a = std::max(a, ceil_div(rest, con.c[k]));
    }
    for (__int128 v = a; v <= b; ++v) {
      y[k] = static_cast<std::int64_t>(v);
      self(self, k + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sphgenus
