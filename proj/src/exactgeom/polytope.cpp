#include "sphgenus/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "double_description.hpp"

namespace sphgenus {

namespace {

std::size_t leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

Vector canonical_base(Vector p, const std::vector<Vector>& directions) {
  for (const auto& d : directions) {
    std::size_t c = leading_index(d);
    Rational f = p[c];
    if (!f.is_zero()) p = p - f * d;
  }
  return p;
}

IntVector integer_row(std::span<const Rational> v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = lcm64(l, x.den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = narrow_checked(static_cast<__int128>(v[i].num()) * (l / v[i].den()));
  }
  make_primitive(out);
  return out;
}

void check_dims(std::span<const Rational> x, std::size_t n, const char* what) {
  if (x.size() != n) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

bool AffineSpan::contains(std::span<const Rational> x) const {
  check_dims(x, base.size(), "AffineSpan::contains");
  Vector diff(x.begin(), x.end());
  diff = diff - base;
  Vector rest = canonical_base(diff, directions);
  return is_zero(rest);
}

Polytope Polytope::hull(std::span<const Vector> input) {
  if (input.empty()) throw std::invalid_argument("empty point set");
  const std::size_t r = input.front().size();
  for (const auto& p : input) {
    if (p.size() != r) throw std::invalid_argument("hull: points of mixed dimensions");
  }
  std::vector<Vector> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.ambient_ = r;
  const Vector& p0 = pts.front();

  Matrix dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - p0);
  auto pivots = rref(dirs, r);
  out.span_.directions = dirs;
  out.span_.base = canonical_base(p0, dirs);

  Matrix complement = nullspace(dirs, r);
  rref(complement, r);
  for (const auto& row : complement) {
    IntVector iv = integer_row(row);
    Vector n = to_vector(iv);
    out.equalities_.push_back({n, dot(n, p0)});
  }

  const std::size_t k = pivots.size();
  if (k == 0) {
    out.vertices_ = {p0};
    return out;
  }

  std::vector<Vector> proj(pts.size(), Vector(k));
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vector row(k + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      proj[i][j] = pts[i][pivots[j]];
      row[j + 1] = -proj[i][j];
    }
    rows.push_back(integer_row(row));
  }
  auto cone = detail::extreme_rays(rows, k + 1);
  if (!cone.pointed) throw std::logic_error("hull: degenerate projection");

  std::vector<Vector> facet_normals;
  std::vector<Rational> facet_offsets;
  for (const auto& ray : cone.rays) {
    // Normals are primitive integer vectors; offsets may be fractional.
    std::int64_t g = 0;
    for (std::size_t j = 1; j <= k; ++j) g = gcd64(g, ray[j]);
    Vector normal = zero_vector(r);
    Vector pn(k);
    for (std::size_t j = 0; j < k; ++j) {
      normal[pivots[j]] = ray[j + 1] / g;
      pn[j] = ray[j + 1] / g;
    }
    out.inequalities_.push_back({normal, Rational(ray[0], g)});
    facet_normals.push_back(pn);
    facet_offsets.push_back(Rational(ray[0], g));
  }
  std::sort(out.inequalities_.begin(), out.inequalities_.end());

  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix tight;
    for (std::size_t f = 0; f < cone.rays.size(); ++f) {
      if (dot(facet_normals[f], proj[i]) == facet_offsets[f]) tight.push_back(facet_normals[f]);
    }
    if (tight.size() >= k && rank(tight, k) == k) out.vertices_.push_back(pts[i]);
  }
  return out;
}

std::optional<Polytope> Polytope::from_constraints(std::size_t r,
                                                   std::span<const Halfspace> inequalities,
                                                   std::span<const Hyperplane> equalities) {
  for (const auto& h : inequalities) check_dims(h.normal, r, "from_constraints");
  for (const auto& h : equalities) check_dims(h.normal, r, "from_constraints");

  Vector x0 = zero_vector(r);
  std::vector<Vector> basis;
  if (equalities.empty()) {
    for (std::size_t i = 0; i < r; ++i) basis.push_back(unit_vector(r, i));
  } else {
    Matrix e;
    Vector rhs;
    for (const auto& h : equalities) {
      e.push_back(h.normal);
      rhs.push_back(h.offset);
    }
    auto sol = solve(e, rhs);
    if (!sol) return std::nullopt;
    x0 = *sol;
    basis = nullspace(e, r);
  }

  const std::size_t m = basis.size();
  if (m == 0) {
    for (const auto& h : inequalities) {
      if (dot(h.normal, x0) > h.offset) return std::nullopt;
    }
    return Polytope::point(x0);
  }

  std::vector<IntVector> rows;
  for (const auto& h : inequalities) {
    Vector row(m + 1);
    row[0] = h.offset - dot(h.normal, x0);
    for (std::size_t j = 0; j < m; ++j) row[j + 1] = -dot(h.normal, basis[j]);
    if (is_zero(std::span<const Rational>(row).subspan(1))) {
      if (row[0].sign() < 0) return std::nullopt;
      continue;
    }
    rows.push_back(integer_row(row));
  }
  IntVector s_row(m + 1, 0);
  s_row[0] = 1;
  rows.push_back(s_row);

  auto cone = detail::extreme_rays(rows, m + 1);
  if (!cone.pointed) throw std::invalid_argument("constraints define an unbounded set");
  std::vector<Vector> verts;
  bool recession = false;
  for (const auto& ray : cone.rays) {
    if (ray[0] == 0) {
      recession = true;
      continue;
    }
    Vector x = x0;
    Rational s(ray[0]);
    for (std::size_t j = 0; j < m; ++j) {
      if (ray[j + 1] != 0) x = x + (Rational(ray[j + 1]) / s) * basis[j];
    }
    verts.push_back(std::move(x));
  }
  if (verts.empty()) return std::nullopt;
  if (recession) throw std::invalid_argument("constraints define an unbounded set");
  return Polytope::hull(verts);
}

Polytope Polytope::point(Vector p) {
  std::vector<Vector> pts{std::move(p)};
  return hull(pts);
}

bool Polytope::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vector& v) { return sphgenus::is_integral(v); });
}

bool Polytope::contains(std::span<const Rational> x, Containment mode) const {
  check_dims(x, ambient_, "contains");
  for (const auto& h : equalities_) {
    if (dot(h.normal, x) != h.offset) return false;
  }
  for (const auto& h : inequalities_) {
    Rational v = dot(h.normal, x);
    if (v > h.offset) return false;
    if (mode == Containment::relative_interior && v == h.offset) return false;
  }
  return true;
}

Polytope Polytope::translated(const Vector& v) const {
  check_dims(v, ambient_, "translated");
  Polytope out = *this;
  for (auto& p : out.vertices_) p = p + v;
  for (auto& h : out.inequalities_) h.offset += dot(h.normal, v);
  for (auto& h : out.equalities_) h.offset += dot(h.normal, v);
  out.span_.base = canonical_base(span_.base + v, span_.directions);
  return out;
}

Polytope Polytope::dilated(const Rational& m) const {
  if (m.sign() < 0) throw std::invalid_argument("dilated: negative factor");
  if (m.is_zero()) return point(zero_vector(ambient_));
  Polytope out = *this;
  for (auto& p : out.vertices_) p = m * p;
  for (auto& h : out.inequalities_) h.offset *= m;
  for (auto& h : out.equalities_) h.offset *= m;
  out.span_.base = m * span_.base;
  return out;
}

Polytope Polytope::negated() const {
  Polytope out = *this;
  for (auto& p : out.vertices_) p = -p;
  std::sort(out.vertices_.begin(), out.vertices_.end());
  for (auto& h : out.inequalities_) h.normal = -h.normal;
  std::sort(out.inequalities_.begin(), out.inequalities_.end());
  for (auto& h : out.equalities_) h.offset = -h.offset;
  out.span_.base = -span_.base;
  return out;
}

std::string Polytope::str() const {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ", ";
    os << to_string(vertices_[i]);
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Polytope& a, const Polytope& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
  }
  if (q.vertices().size() == 1) return p.translated(q.vertices().front());
  if (p.vertices().size() == 1) return q.translated(p.vertices().front());
  std::vector<Vector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return Polytope::hull(sums);
}

FaceLattice face_lattice(const Polytope& p) {
  const auto& verts = p.vertices();
  const std::size_t nv = verts.size();
  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;

  std::vector<std::vector<std::size_t>> facets;
  for (const auto& h : p.inequalities()) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < nv; ++i) {
      if (dot(h.normal, verts[i]) == h.offset) f.push_back(i);
    }
    facets.push_back(std::move(f));
  }

  std::set<std::vector<std::size_t>> seen(facets.begin(), facets.end());
  std::vector<std::vector<std::size_t>> queue(seen.begin(), seen.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& f : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[qi].begin(), queue[qi].end(), f.begin(), f.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(meet);
    }
  }
  seen.insert(all);

  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keyed;
  for (const auto& face : seen) {
    Matrix diffs;
    for (std::size_t i = 1; i < face.size(); ++i) diffs.push_back(verts[face[i]] - verts[face[0]]);
    keyed.emplace_back(rank(diffs, p.ambient_dim()), face);
  }
  std::sort(keyed.begin(), keyed.end());
  FaceLattice out;
  for (auto& [d, f] : keyed) {
    out.dims.push_back(d);
    out.faces.push_back(std::move(f));
  }
  return out;
}

std::vector<Polytope> faces(const Polytope& p) {
  auto lattice = face_lattice(p);
  std::vector<Polytope> out;
  out.reserve(lattice.faces.size());
  for (const auto& f : lattice.faces) {
    std::vector<Vector> pts;
    for (auto i : f) pts.push_back(p.vertices()[i]);
    out.push_back(Polytope::hull(pts));
  }
  std::stable_sort(out.begin(), out.end(), [](const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  return out;
}

Rational volume(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  if (p.dim() != d) throw std::invalid_argument("volume requires full-dimensional polytope");
  if (d == 0) return 1;
  auto lattice = face_lattice(p);
  const std::size_t nf = lattice.faces.size();

  // Pulling triangulation: cone from the first vertex of each face over the
  // triangulated subfaces that avoid it.
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  auto triangulate = [&](auto&& self, std::size_t fi) -> const std::vector<std::vector<std::size_t>>& {
    if (auto it = memo.find(fi); it != memo.end()) return it->second;
    const auto& face = lattice.faces[fi];
    std::vector<std::vector<std::size_t>> simplices;
    if (lattice.dims[fi] == 0) {
      simplices.push_back({face.front()});
    } else {
      std::size_t apex = face.front();
      for (std::size_t hi = 0; hi < nf; ++hi) {
        if (lattice.dims[hi] + 1 != lattice.dims[fi]) continue;
        const auto& sub = lattice.faces[hi];
        if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        for (auto s : self(self, hi)) {
          s.push_back(apex);
          simplices.push_back(std::move(s));
        }
      }
    }
    return memo.emplace(fi, std::move(simplices)).first->second;
  };

  const auto& simplices = triangulate(triangulate, nf - 1);
  Rational total;
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= Rational(static_cast<std::int64_t>(i));
  for (const auto& s : simplices) {
    Matrix m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(p.vertices()[s[i]] - p.vertices()[s[0]]);
    total += abs(determinant(m));
  }
  return total / fact;
}

}  // namespace sphgenus
