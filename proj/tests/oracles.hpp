#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here calls into the polytope or lattice code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "sphgenus/rational.hpp"

namespace oracle {

using sphgenus::Rational;
using Point = std::vector<Rational>;

inline Point ints(std::initializer_list<std::int64_t> xs) { return Point(xs.begin(), xs.end()); }

/// Gaussian elimination; returns the unique solution or nullopt if singular/inconsistent.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && a[s][c].is_zero()) ++s;
    if (s == rows) return std::nullopt;
    std::swap(a[s], a[r]);
    std::swap(b[s], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    piv.push_back(c);
    ++r;
  }
  if (piv.size() != cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[piv[i]] = b[i] / a[i][piv[i]];
  return x;
}

/// Carathéodory test: x is a convex combination of some affinely independent
/// subset of at most d+1 of the points.
inline bool in_convex_hull(const std::vector<Point>& pts, const Point& x) {
  const std::size_t d = x.size();
  const std::size_t n = pts.size();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!pick.empty()) {
      // rows: coordinates then the affine row
      std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(pick.size()));
      std::vector<Rational> b(d + 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < pick.size(); ++j) a[i][j] = pts[pick[j]][i];
        b[i] = x[i];
      }
      for (std::size_t j = 0; j < pick.size(); ++j) a[d][j] = 1;
      b[d] = 1;
      auto lam = solve_unique(a, b);
      if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& v) { return v.sign() >= 0; })) {
        return true;
      }
    }
    if (pick.size() == d + 1) return false;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// Points of the input that are not convex combinations of the others.
inline std::vector<Point> extreme_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (others.empty() || !in_convex_hull(others, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

/// Relative-interior test: x is in the hull and can be pushed slightly away
/// from every vertex while staying in the hull.
inline bool in_relative_interior(const std::vector<Point>& verts, const Point& x) {
  if (!in_convex_hull(verts, x)) return false;
  const Rational eps(1, 1000003);
  for (const auto& v : verts) {
    Point y = x;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += eps * (x[i] - v[i]);
    if (y != x && !in_convex_hull(verts, y)) return false;
  }
  return true;
}

/// Integer points of the bounding box that lie in the hull (or its relative interior).
inline std::vector<Point> brute_lattice_points(const std::vector<Point>& verts, bool interior) {
  const std::size_t d = verts.front().size();
  std::vector<std::int64_t> lo(d, INT64_MAX), hi(d, INT64_MIN);
  for (const auto& v : verts) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i].ceil());
      hi[i] = std::max(hi[i], v[i].floor());
    }
  }
  std::vector<Point> out;
  Point cur(d);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      bool ok = interior ? in_relative_interior(verts, cur) : in_convex_hull(verts, cur);
      if (ok) out.push_back(cur);
      return;
    }
    for (std::int64_t v = lo[k]; v <= hi[k]; ++v) {
      cur[k] = v;
      rec(k + 1);
    }
  };
  if (d == 0) return {cur};
  rec(0);
  return out;
}

/// Number of increasing-convention Gelfand-Zetlin patterns with top row lambda.
inline std::int64_t gz_pattern_count(const std::vector<std::int64_t>& top) {
  if (top.size() <= 1) return 1;
  std::int64_t total = 0;
  std::vector<std::int64_t> next(top.size() - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == next.size()) {
      total += gz_pattern_count(next);
      return;
    }
    for (std::int64_t v = top[i]; v <= top[i + 1]; ++v) {
      next[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

/// Dimension of an irreducible GL(n) module via the hook-content formula.
/// lambda is increasing and nonnegative.
inline Rational hook_content_dimension(const std::vector<std::int64_t>& increasing) {
  std::vector<std::int64_t> part(increasing.rbegin(), increasing.rend());  // decreasing partition
  const std::int64_t n = static_cast<std::int64_t>(part.size());
  Rational num = 1, den = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < part[i]; ++j) {
      num *= Rational(n + j - i);
      std::int64_t arm = part[i] - j - 1;
      std::int64_t leg = 0;
      for (std::int64_t k = i + 1; k < n && part[k] > j; ++k) ++leg;
      den *= Rational(arm + leg + 1);
    }
  }
  return num / den;
}

/// Twice the signed area of a polygon given in cyclic order.
inline Rational shoelace_twice(const std::vector<Point>& cyc) {
  Rational s;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& a = cyc[i];
    const auto& b = cyc[(i + 1) % cyc.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s;
}

/// Area of the convex hull of planar points (gift wrapping on extreme points).
inline Rational planar_hull_area(const std::vector<Point>& pts) {
  auto ext = extreme_points(pts);
  if (ext.size() < 3) return 0;
  // Sort by angle around the lowest point using cross products.
  Point o = *std::min_element(ext.begin(), ext.end(), [](const Point& a, const Point& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
  });
  std::vector<Point> rest;
  for (const auto& p : ext) {
    if (p != o) rest.push_back(p);
  }
  std::sort(rest.begin(), rest.end(), [&](const Point& a, const Point& b) {
    Rational cr = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    return cr.sign() > 0;
  });
  std::vector<Point> cyc{o};
  cyc.insert(cyc.end(), rest.begin(), rest.end());
  return sphgenus::abs(shoelace_twice(cyc)) / Rational(2);
}

/// Random integer point set in [0, hi]^d.
inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t d, std::size_t count,
                                        std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(0, hi);
  std::vector<Point> out(count, Point(d));
  for (auto& p : out) {
    for (auto& x : p) x = dist(rng);
  }
  return out;
}

}  // namespace oracle
