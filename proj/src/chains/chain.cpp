#include "sphgenus/chain.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace sphgenus {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("convex chains of different ambient dimension");
}

std::int64_t sign_of_parity(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

/// Normal primitive with first nonzero entry positive.
Hyperplane oriented(Vector normal, Rational offset) {
  IntVector iv = primitive_integer(normal);
  Rational scale = normal[0].is_zero() ? Rational(0) : normal[0] / Rational(iv[0]);
  for (std::size_t i = 0; scale.is_zero() && i < normal.size(); ++i) {
    if (iv[i] != 0) scale = normal[i] / Rational(iv[i]);
  }
  std::size_t lead = 0;
  while (iv[lead] == 0) ++lead;
  if (iv[lead] < 0) {
    for (auto& x : iv) x = -x;
    scale = -scale;
  }
  return {to_vector(iv), offset / scale};
}

struct Cell {
  std::size_t dim;
  std::int64_t value;
};

/// Value of the chain on every cell of the arrangement inside its support,
/// keyed by the vertex list of the cell closure.
std::map<std::vector<Vector>, Cell> cells(const ConvexChain& c) {
  std::set<Hyperplane> arrangement;
  for (const auto& [p, k] : c.terms()) {
    for (const auto& h : p.inequalities()) arrangement.insert(oriented(h.normal, h.offset));
    for (const auto& h : p.equalities()) arrangement.insert(oriented(h.normal, h.offset));
  }
  std::map<std::vector<Vector>, Cell> out;
  for (const auto& [p, k] : c.terms()) {
    std::vector<Polytope> pieces{p};
    for (const auto& h : arrangement) {
      std::vector<Polytope> next;
      for (auto& piece : pieces) {
        bool below = false, above = false;
        for (const auto& v : piece.vertices()) {
          auto s = (dot(h.normal, v) - h.offset).sign();
          below = below || s < 0;
          above = above || s > 0;
        }
        if (!(below && above)) {
          next.push_back(std::move(piece));
          continue;
        }
        for (int side : {1, -1}) {
          std::vector<Halfspace> ineqs = piece.inequalities();
          ineqs.push_back({Rational(side) * h.normal, Rational(side) * h.offset});
          auto half = Polytope::from_constraints(piece.ambient_dim(), ineqs, piece.equalities());
          next.push_back(std::move(*half));
        }
      }
      pieces = std::move(next);
    }
    for (const auto& piece : pieces) {
      auto lattice = face_lattice(piece);
      for (std::size_t f = 0; f < lattice.faces.size(); ++f) {
        std::vector<Vector> verts;
        for (auto i : lattice.faces[f]) verts.push_back(piece.vertices()[i]);
        if (out.count(verts)) continue;
        Vector centre = zero_vector(piece.ambient_dim());
        for (const auto& v : verts) centre = centre + v;
        centre = Rational(1, static_cast<std::int64_t>(verts.size())) * centre;
        out.emplace(std::move(verts), Cell{lattice.dims[f], c(centre)});
      }
    }
  }
  return out;
}

}  // namespace

ConvexChain ConvexChain::of(const Polytope& p, std::int64_t coefficient) {
  ConvexChain c(p.ambient_dim());
  c.add_term(p, coefficient);
  return c;
}

ConvexChain ConvexChain::unit(std::size_t ambient_dim) {
  return of(Polytope::point(zero_vector(ambient_dim)));
}

void ConvexChain::add_term(const Polytope& p, std::int64_t coefficient) {
  require_same(ambient_, p.ambient_dim());
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second = narrow_checked(static_cast<__int128>(it->second) + coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t ConvexChain::operator()(std::span<const Rational> x) const {
  std::int64_t v = 0;
  for (const auto& [p, c] : terms_) {
    if (p.contains(x)) v += c;
  }
  return v;
}

ConvexChain& ConvexChain::operator+=(const ConvexChain& rhs) {
  require_same(ambient_, rhs.ambient_);
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

ConvexChain ConvexChain::operator-() const { return -1 * *this; }

ConvexChain operator*(std::int64_t s, const ConvexChain& c) {
  ConvexChain out(c.ambient_);
  for (const auto& [p, k] : c.terms_) out.add_term(p, narrow_checked(static_cast<__int128>(s) * k));
  return out;
}

ConvexChain operator*(const ConvexChain& a, const ConvexChain& b) {
  require_same(a.ambient_, b.ambient_);
  ConvexChain out(a.ambient_);
  for (const auto& [p, x] : a.terms_) {
    for (const auto& [q, y] : b.terms_) {
      out.add_term(minkowski_sum(p, q), narrow_checked(static_cast<__int128>(x) * y));
    }
  }
  return out;
}

std::string ConvexChain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << p.str();
  }
  return os.str();
}

ConvexChain ConvexChain::normalized() const {
  ConvexChain out(ambient_);
  for (const auto& [verts, cell] : cells(*this)) {
    if (cell.value == 0) continue;
    out += cell.value * relative_interior_chain(Polytope::hull(verts));
  }
  return out;
}

bool operator==(const ConvexChain& a, const ConvexChain& b) {
  if (a.same_terms(b)) return true;
  if (a.ambient_ != b.ambient_) return false;
  for (const auto& [verts, cell] : cells(a - b)) {
    if (cell.value != 0) return false;
  }
  return true;
}

ConvexChain relative_interior_chain(const Polytope& p) {
  ConvexChain out(p.ambient_dim());
  for (const auto& f : faces(p)) out.add_term(f, sign_of_parity(p.dim() - f.dim()));
  return out;
}

ConvexChain inverse_of_polytope(const Polytope& p) {
  return sign_of_parity(p.dim()) * relative_interior_chain(p.negated());
}

ConvexChain power(const Polytope& p, std::int64_t m) {
  if (m >= 0) return ConvexChain::of(p.dilated(m));
  return inverse_of_polytope(p.dilated(-m));
}

std::int64_t euler_integral(const ConvexChain& c) {
  std::int64_t total = 0;
  for (const auto& [p, k] : c.terms()) total += k;
  return total;
}

Rational weighted_lattice_sum(const ConvexChain& c, const ShiftedLattice& lattice, const WeightPoly& w) {
  require_same(c.ambient_dim(), lattice.ambient_dim());
  require_same(c.ambient_dim(), w.arity());
  if (c.is_zero()) return 0;
  std::vector<Vector> support;
  for (const auto& [p, k] : c.terms()) {
    support.insert(support.end(), p.vertices().begin(), p.vertices().end());
  }
  Rational total;
  for (const auto& x : lattice_points(Polytope::hull(support), lattice)) {
    std::int64_t v = c(x);
    if (v != 0) total += Rational(v) * w(x);
  }
  return total;
}

}  // namespace sphgenus
