#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sphgenus/lattice.hpp"
#include "sphgenus/polytope.hpp"

using namespace sphgenus;
using oracle::ints;

namespace {

Polytope hull_of(std::initializer_list<std::initializer_list<std::int64_t>> pts) {
  std::vector<Vector> v;
  for (auto p : pts) v.push_back(ints(p));
  return Polytope::hull(v);
}

Polytope random_polytope(std::mt19937_64& rng, std::size_t d, std::int64_t hi) {
  std::uniform_int_distribution<std::size_t> count(1, 7);
  return Polytope::hull(oracle::random_points(rng, d, count(rng), hi));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(-2, 6);
  CHECK((a + b) == Rational(1, 6));
  CHECK((a * b) == Rational(-1, 6));
  CHECK((a / b) == Rational(-3, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational::parse(" 3/-6 ") == Rational(-1, 2));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("hull of a triangle with an interior point") {
  auto t = hull_of({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  CHECK(t.vertices() == std::vector<Vector>{ints({0, 0}), ints({0, 3}), ints({3, 0})});
  CHECK(t.dim() == 2);
  CHECK(t.inequalities().size() == 3);
  CHECK(t.equalities().empty());
}

TEST_CASE("hull of a single point") {
  auto p = hull_of({{5, 7}});
  CHECK(p.dim() == 0);
  CHECK(p.vertices().size() == 1);
  CHECK(p.inequalities().empty());
  CHECK(p.equalities().size() == 2);
}

TEST_CASE("hull of the unit square") {
  auto sq = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(sq.inequalities().size() == 4);
  CHECK(sq.vertices().size() == 4);
  CHECK(volume(sq) == 1);
}

TEST_CASE("hull errors") {
  std::vector<Vector> none;
  CHECK_THROWS_WITH(Polytope::hull(none), "empty point set");
  std::vector<Vector> mixed{ints({1}), ints({1, 2})};
  CHECK_THROWS(Polytope::hull(mixed));
}

TEST_CASE("hull vertices agree with the extreme-point oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 1 + trial % 3;
    auto pts = oracle::random_points(rng, d, 3 + trial % 6, 5);
    auto p = Polytope::hull(pts);
    CHECK(p.vertices() == oracle::extreme_points(pts));
    for (const auto& v : p.vertices()) {
      for (const auto& h : p.inequalities()) CHECK(dot(h.normal, v) <= h.offset);
    }
    // Irredundancy: every facet is tight on at least dim vertices.
    for (const auto& h : p.inequalities()) {
      std::size_t tight = 0;
      for (const auto& v : p.vertices()) tight += dot(h.normal, v) == h.offset;
      CHECK(tight >= p.dim());
    }
    CHECK(Polytope::hull(p.vertices()) == p);
  }
}

TEST_CASE("lower-dimensional hulls in higher ambient space") {
  auto seg = hull_of({{0, 0, 0}, {2, 2, 2}, {1, 1, 1}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.equalities().size() == 2);
  CHECK(seg.inequalities().size() == 2);
  auto tri = hull_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(tri.dim() == 2);
  CHECK(tri.inequalities().size() == 3);
  CHECK(tri.contains(std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                     Containment::relative_interior));
}

TEST_CASE("H-representation membership matches convex combinations") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-12, 60);
  for (int trial = 0; trial < 4; ++trial) {
    std::size_t d = 2 + trial % 2;
    auto pts = oracle::random_points(rng, d, 6, 4);
    auto p = Polytope::hull(pts);
    for (int i = 0; i < 1000; ++i) {
      Vector x(d);
      for (auto& c : x) c = Rational(num(rng), 12);
      CHECK(p.contains(x) == oracle::in_convex_hull(p.vertices(), x));
    }
  }
}

TEST_CASE("from_constraints inverts hull") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_polytope(rng, 1 + trial % 3, 6);
    auto q = Polytope::from_constraints(p.ambient_dim(), p.inequalities(), p.equalities());
    REQUIRE(q.has_value());
    CHECK(*q == p);
    CHECK(q->inequalities() == p.inequalities());
    CHECK(q->equalities() == p.equalities());
  }
  std::vector<Halfspace> empty{{ints({1}), 0}, {ints({-1}), -1}};
  CHECK_FALSE(Polytope::from_constraints(1, empty).has_value());
  std::vector<Halfspace> ray{{ints({-1}), 0}};
  CHECK_THROWS(Polytope::from_constraints(1, ray));
}

TEST_CASE("minkowski sums") {
  auto a = hull_of({{0, 0}, {1, 0}});
  auto b = hull_of({{0, 0}, {0, 1}});
  auto sq = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(minkowski_sum(a, b) == sq);
  CHECK(minkowski_sum(sq, sq) == hull_of({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  CHECK(minkowski_sum(sq, hull_of({{3, 4}})) == sq.translated(ints({3, 4})));
  CHECK_THROWS(minkowski_sum(a, hull_of({{0}})));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 1 + trial % 3;
    auto p = random_polytope(rng, d, 3), q = random_polytope(rng, d, 3), r = random_polytope(rng, d, 3);
    CHECK(minkowski_sum(p, q) == minkowski_sum(q, p));
    CHECK(minkowski_sum(minkowski_sum(p, q), r) == minkowski_sum(p, minkowski_sum(q, r)));
    CHECK(minkowski_sum(p, q).dim() >= std::max(p.dim(), q.dim()));
  }
}

TEST_CASE("dimension and affine span") {
  CHECK(hull_of({{0, 0}, {2, 0}}).dim() == 1);
  CHECK(hull_of({{4, 4}}).dim() == 0);
  auto s1 = hull_of({{0, 1}, {2, 3}});
  auto s2 = hull_of({{5, 6}, {7, 8}});
  CHECK(s1.affine_span() == s2.affine_span());
  CHECK(s1.affine_span().contains(ints({-10, -9})));
  CHECK_FALSE(s1.affine_span().contains(ints({0, 0})));
}

TEST_CASE("containment modes") {
  auto t = hull_of({{0, 0}, {3, 0}, {0, 3}});
  CHECK(t.contains(ints({1, 1}), Containment::relative_interior));
  CHECK_FALSE(t.contains(ints({0, 0}), Containment::relative_interior));
  CHECK(t.contains(ints({0, 0})));
  auto seg = hull_of({{0, 0}, {2, 0}});
  CHECK(seg.contains(ints({1, 0}), Containment::relative_interior));
  CHECK_FALSE(seg.contains(ints({1, 1})));
}

TEST_CASE("translation, dilation and negation keep canonical form") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_polytope(rng, 1 + trial % 3, 5);
    Vector v(p.ambient_dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(static_cast<std::int64_t>(i) - 2, 3);
    auto check_same = [](const Polytope& fast, const Polytope& slow) {
      CHECK(fast == slow);
      CHECK(fast.inequalities() == slow.inequalities());
      CHECK(fast.equalities() == slow.equalities());
      CHECK(fast.affine_span() == slow.affine_span());
    };
    std::vector<Vector> moved, scaled, flipped;
    for (const auto& x : p.vertices()) {
      moved.push_back(x + v);
      scaled.push_back(Rational(5, 2) * x);
      flipped.push_back(-x);
    }
    check_same(p.translated(v), Polytope::hull(moved));
    check_same(p.dilated(Rational(5, 2)), Polytope::hull(scaled));
    check_same(p.negated(), Polytope::hull(flipped));
  }
}

TEST_CASE("volumes") {
  CHECK(volume(hull_of({{0, 0}, {3, 0}, {0, 3}})) == Rational(9, 2));
  CHECK(volume(hull_of({{0, 0}, {2, 0}, {0, 2}, {2, 2}})) == 4);
  CHECK(volume(hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rational(1, 6));
  CHECK(volume(hull_of({{0}, {5}})) == 5);
  CHECK_THROWS_WITH(volume(hull_of({{0, 0}, {1, 1}})), "volume requires full-dimensional polytope");
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = oracle::random_points(rng, 2, 3 + trial % 6, 6);
    auto p = Polytope::hull(pts);
    if (p.dim() < 2) continue;
    CHECK(volume(p) == oracle::planar_hull_area(pts));
  }
  // Unimodular cube triangulation check in 3D.
  auto cube = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}});
  CHECK(volume(cube) == 8);
}

TEST_CASE("face counts") {
  CHECK(faces(hull_of({{0, 0}, {2, 0}})).size() == 3);
  CHECK(faces(hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).size() == 9);
  CHECK(faces(hull_of({{1, 1}})).size() == 1);
  auto cube = hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(faces(cube).size() == 27);
  auto simplex = hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(faces(simplex).size() == 15);
}

TEST_CASE("face decomposition of the relative interior") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> num(-2, 14);
  for (int trial = 0; trial < 6; ++trial) {
    auto p = random_polytope(rng, 2 + trial % 2, 3);
    auto fs = faces(p);
    for (int i = 0; i < 100; ++i) {
      Vector x(p.ambient_dim());
      for (auto& c : x) c = Rational(num(rng), 4);
      std::int64_t lhs = 0;
      for (const auto& f : fs) {
        if (f.contains(x)) lhs += (f.dim() % 2 == 0) ? 1 : -1;
      }
      std::int64_t sign = (p.dim() % 2 == 0) ? 1 : -1;
      std::int64_t rhs = p.contains(x, Containment::relative_interior) ? sign : 0;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("lattice points") {
  auto z1 = ShiftedLattice::standard(1);
  auto seg = hull_of({{0}, {2}});
  CHECK(lattice_points(seg, z1).size() == 3);
  auto z2 = ShiftedLattice::standard(2);
  auto tri = hull_of({{0, 0}, {3, 0}, {0, 3}});
  CHECK(lattice_points(tri, z2, Containment::relative_interior) == std::vector<Vector>{ints({1, 1})});
  auto sq = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(lattice_points(sq, z2, Containment::relative_interior).empty());

  // Sublattice of even points shifted by (1, 0).
  ShiftedLattice odd(2, {{2, 0}, {0, 2}}, ints({1, 0}));
  auto big = hull_of({{0, 0}, {4, 0}, {0, 4}, {4, 4}});
  CHECK(lattice_points(big, odd).size() == 6);
  CHECK(odd.contains(ints({3, 2})));
  CHECK_FALSE(odd.contains(ints({2, 2})));

  // Rank-deficient lattice inside a full-dimensional polytope.
  ShiftedLattice diag(2, {{1, 1}}, ints({0, 0}));
  CHECK(lattice_points(big, diag).size() == 5);
  ShiftedLattice none(2, {}, ints({1, 1}));
  CHECK(lattice_points(big, none).size() == 1);
  CHECK(lattice_points(big, none, Containment::relative_interior).size() == 1);
  CHECK(lattice_points(sq, ShiftedLattice(2, {}, Vector{Rational(1, 2), Rational(1, 2)})).size() == 1);
}

TEST_CASE("lattice counts agree with the bounding-box oracle") {
  std::mt19937_64 rng(29);
  auto z = [](std::size_t d) { return ShiftedLattice::standard(d); };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 1 + trial % 3;
    auto p = random_polytope(rng, d, d == 3 ? 4 : 8);
    CHECK(lattice_points(p, z(d)) == oracle::brute_lattice_points(p.vertices(), false));
    if (trial % 2 == 0) {
      CHECK(lattice_points(p, z(d), Containment::relative_interior) ==
            oracle::brute_lattice_points(p.vertices(), true));
    }
  }
}
