#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sphgenus/chain.hpp"
#include "sphgenus/counts.hpp"
#include "sphgenus/root_system.hpp"

using namespace sphgenus;
using oracle::ints;

namespace {

Polytope hull_of(std::initializer_list<std::initializer_list<std::int64_t>> pts) {
  std::vector<Vector> v;
  for (auto p : pts) v.push_back(ints(p));
  return Polytope::hull(v);
}

Polytope random_polytope(std::mt19937_64& rng, std::size_t d, std::int64_t hi) {
  std::uniform_int_distribution<std::size_t> count(1, 5);
  return Polytope::hull(oracle::random_points(rng, d, count(rng), hi));
}

}  // namespace

TEST_CASE("closed and interior counts") {
  auto z1 = ShiftedLattice::standard(1), z2 = ShiftedLattice::standard(2);
  auto seg = hull_of({{0}, {2}});
  CHECK(count_n(seg, z1) == 3);
  CHECK(count_n_interior(seg, z1) == 1);
  CHECK(count_n_prime(seg, z1) == -1);
  auto tri = hull_of({{0, 0}, {3, 0}, {0, 3}});
  CHECK(count_n(tri, z2) == 10);
  CHECK(count_n_interior(tri, z2) == 1);
  CHECK(count_n_prime(tri, z2) == 1);
  auto pt = hull_of({{1, 1}});
  CHECK(count_n(pt, z2) == 1);
  CHECK(count_n_interior(pt, z2) == 1);
  CHECK(count_n_prime(pt, z2) == 1);
}

TEST_CASE("counts against brute force") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    std::size_t d = 1 + t % 3;
    auto p = random_polytope(rng, d, 4);
    auto z = ShiftedLattice::standard(d);
    auto closed = static_cast<std::int64_t>(oracle::brute_lattice_points(p.vertices(), false).size());
    auto open = static_cast<std::int64_t>(oracle::brute_lattice_points(p.vertices(), true).size());
    CHECK(count_n(p, z) == closed);
    CHECK(count_n_interior(p, z) == open);
    CHECK(count_n(p, z) >= count_n_interior(p, z));
    CHECK(count_n_prime(p, z) == (p.dim() % 2 == 0 ? open : -open));
  }
}

TEST_CASE("weighted sums") {
  auto f2 = weyl_polynomial(RootSystem::type_a(2));
  for (std::int64_t m = 0; m < 5; ++m) {
    auto shifted = ShiftedLattice::standard(2, ints({0, m}));
    CHECK(sum_s(Polytope::point(ints({0, m})), shifted, f2) == m + 1);
  }
  auto seg = hull_of({{0, 0}, {0, 2}});
  CHECK(sum_s(seg, ShiftedLattice::standard(2), f2) == 6);
  auto one1 = WeightPoly::constant_one(1);
  auto z1 = ShiftedLattice::standard(1);
  CHECK(sum_s_interior(hull_of({{0}, {2}}), z1, one1) == 1);
  CHECK(sum_s_prime(hull_of({{0}, {2}}), z1, one1) == -1);
  CHECK(sum_s_prime(hull_of({{0, 0}, {3, 0}, {0, 3}}), ShiftedLattice::standard(2), WeightPoly::constant_one(2)) ==
        1);
}

TEST_CASE("torus reduction") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 15; ++t) {
    std::size_t d = 1 + t % 3;
    auto p = random_polytope(rng, d, 4);
    auto z = ShiftedLattice::standard(d);
    auto one = WeightPoly::constant_one(d);
    CHECK(sum_s(p, z, one) == count_n(p, z));
    CHECK(sum_s_interior(p, z, one) == count_n_interior(p, z));
    CHECK(sum_s_prime(p, z, one) == count_n_prime(p, z));
    CHECK(count_n_prime(p, z) == weighted_lattice_sum(inverse_of_polytope(p), z, one));
  }
}

TEST_CASE("restricted degree and Itaka dimension") {
  auto f2 = weyl_polynomial(RootSystem::type_a(2));
  AffineSpan diag{zero_vector(2), {ints({1, 1})}};
  AffineSpan vertical{zero_vector(2), {ints({0, 1})}};
  CHECK(restricted_degree(WeightPoly::constant_one(2), vertical) == 0);
  CHECK(restricted_degree(f2, diag) == 0);
  CHECK(restricted_degree(f2, vertical) == 1);

  std::mt19937_64 rng(33);
  auto p = random_polytope(rng, 2, 4);
  CHECK(itaka(p, WeightPoly::constant_one(2)) == p.dim());
  for (std::int64_t m = 1; m < 4; ++m) CHECK(itaka(Polytope::point(ints({0, m})), f2) == 1);
  CHECK(itaka(Polytope::point(ints({0, 0, 0})), weyl_polynomial(RootSystem::type_a(3))) == 0);
  CHECK(itaka(Polytope::point(ints({2, 2})), f2) == 0);
}

TEST_CASE("interpolation of dilation functions") {
  auto z1 = ShiftedLattice::standard(1), z2 = ShiftedLattice::standard(2);
  auto seg = hull_of({{0}, {2}});
  auto lin = interpolate_dilation([&](std::int64_t m) { return Rational(count_n(seg.dilated(m), z1)); }, 1);
  CHECK(lin == UniPoly{{Rational(1), Rational(2)}});
  CHECK(lin(-1) == -1);
  CHECK(lin(-1) == count_n_prime(seg, z1));

  auto sq = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto quad = interpolate_dilation([&](std::int64_t m) { return Rational(count_n(sq.dilated(m), z2)); }, 2);
  CHECK(quad == UniPoly{{Rational(1), Rational(2), Rational(1)}});
  CHECK(quad(-1) == 0);
  CHECK(quad(-1) == count_n_prime(sq, z2));

  auto half = Polytope::hull(std::vector<Vector>{ints({0}), Vector{Rational(1, 2)}});
  CHECK_THROWS_WITH(
      interpolate_dilation([&](std::int64_t m) { return Rational(count_n(half.dilated(m), z1)); }, 1),
      doctest::Contains("dilation function is not polynomial of the stated degree"));
  CHECK_THROWS_AS(interpolate_dilation([](std::int64_t m) { return Rational(m * m * m); }, 2), std::domain_error);
}

TEST_CASE("Ehrhart reciprocity with Weyl weights") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 12; ++t) {
    std::size_t d = 2 + t % 2;
    auto p = random_polytope(rng, d, 3);
    auto z = ShiftedLattice::standard(d);
    for (const auto& w : {WeightPoly::constant_one(d), weyl_polynomial(RootSystem::type_a(d))}) {
      auto degree = p.dim() + weight_degree(p, w);
      auto poly = interpolate_dilation([&](std::int64_t m) { return sum_s(p.dilated(m), z, w); }, degree);
      CHECK(poly(-1) == sum_s_prime(p, z, w));
    }
  }
}

TEST_CASE("Ehrhart reciprocity with shifts") {
  auto f2 = weyl_polynomial(RootSystem::type_a(2));
  Vector shift = ints({0, 1});
  ShiftedLattice diagonal(2, {IntVector{1, 1}}, zero_vector(2));
  auto seg = Polytope::hull(std::vector<Vector>{ints({0, 1}), ints({2, 3})});
  auto lattice = diagonal.with_shift(shift);
  auto degree = seg.dim() + weight_degree(seg, f2);
  auto poly = interpolate_dilation(
      [&](std::int64_t m) {
        return sum_s(seg.dilated(m), diagonal.with_shift(Rational(m) * shift), f2);
      },
      degree);
  CHECK(poly(-1) == sum_s_prime(seg, lattice, f2));
}
