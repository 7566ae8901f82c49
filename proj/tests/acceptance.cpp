#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sphgenus/chain.hpp"
#include "sphgenus/counts.hpp"
#include "sphgenus/genus.hpp"
#include "sphgenus/string_cone.hpp"

using namespace sphgenus;
using oracle::ints;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Tally {
  bool ok = true;
  std::ostringstream first_failure;
  std::size_t cases = 0;

  void fail(const std::string& why) {
    if (ok) first_failure << why;
    ok = false;
  }
  Outcome done(const std::string& summary) const {
    return {ok, ok ? summary : summary + "; first failure: " + first_failure.str()};
  }
};

std::vector<Vector> random_points(std::mt19937_64& rng, std::size_t d, std::size_t count, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> coord(0, hi);
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    IntVector p(d);
    for (auto& x : p) x = coord(rng);
    pts.push_back(to_vector(p));
  }
  return pts;
}

std::vector<Vector> full_dim_points(std::mt19937_64& rng, std::size_t d, std::int64_t hi) {
  for (;;) {
    auto pts = random_points(rng, d, d + 1 + rng() % 3, hi);
    if (Polytope::hull(pts).dim() == d) return pts;
  }
}

std::vector<IntVector> standard_basis(std::size_t n) {
  std::vector<IntVector> b(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<std::int64_t>(i));
  return f;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Scenario toric(std::size_t n, std::vector<std::vector<Vector>> supports) {
  return Scenario{ToricScenario{n, std::move(supports)}};
}

Outcome bkk_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  Tally t;
  std::size_t attempts = 0;
  while (t.cases < 60 && attempts < 1000) {
    ++attempts;
    const std::size_t n = 1 + attempts % 3;
    std::vector<std::vector<Vector>> supports;
    std::vector<Polytope> polys;
    for (std::size_t i = 0; i < n; ++i) {
      supports.push_back(random_points(rng, n, n + 1 + rng() % 2, 4));
      polys.push_back(Polytope::hull(supports.back()));
    }
    const Scenario s = toric(n, supports);
    if (!is_independent(s)) continue;
    ++t.cases;
    auto r = genus(s);
    const Rational expect = factorial(n) * mixed_volume(polys);
    if (!r.chi || *r.chi != expect) t.fail("n=" + std::to_string(n) + " chi " + (r.chi ? r.chi->str() : "none") +
                                           " vs " + expect.str());
    if (n == 2) {
      std::vector<oracle::Point> sum;
      for (const auto& a : supports[0]) {
        for (const auto& b : supports[1]) sum.push_back(a + b);
      }
      const Rational planar = oracle::planar_hull_area(sum) - oracle::planar_hull_area(supports[0]) -
                              oracle::planar_hull_area(supports[1]);
      if (planar != expect) t.fail("planar polarization " + planar.str() + " vs " + expect.str());
    }
  }
  const double secs = seconds_since(t0);
  if (t.cases < 50) t.fail("only " + std::to_string(t.cases) + " independent systems");
  if (secs >= 60) t.fail("took " + fmt_seconds(secs));
  return t.done(std::to_string(t.cases) + " systems, " + fmt_seconds(secs));
}

Outcome plane_curves() {
  Tally t;
  struct Curve {
    std::int64_t degree;
    std::int64_t chi;
    std::int64_t h10;
  };
  for (const Curve c : {Curve{3, 0, 1}, Curve{4, -2, 3}}) {
    const std::vector<Vector> tri{ints({0, 0}), ints({c.degree, 0}), ints({0, c.degree})};
    auto r = genus(toric(2, {tri}));
    const auto interior = oracle::brute_lattice_points(tri, true).size();
    const std::string tag = "degree " + std::to_string(c.degree);
    if (!r.chi || *r.chi != Rational(c.chi)) t.fail(tag + " chi");
    if (r.hp0.size() != 2 || r.hp0[1].status != Hp0Status::exact || *r.hp0[1].value != Rational(c.h10)) {
      t.fail(tag + " h10");
    }
    if (static_cast<std::int64_t>(interior) != c.h10) t.fail(tag + " interior count");
  }
  return t.done("cubic chi 0 h10 1, quartic chi -2 h10 3");
}

Outcome two_squares() {
  Tally t;
  const std::vector<Vector> sq{ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})};
  auto r = genus(toric(2, {sq, sq}));
  const Rational mv = mixed_volume({Polytope::hull(sq), Polytope::hull(sq)});
  if (!r.chi || *r.chi != Rational(2)) t.fail("chi");
  if (factorial(2) * mv != Rational(2)) t.fail("2! V = " + (factorial(2) * mv).str());
  return t.done("chi 2 = 2! V");
}

void dominant_weights(std::size_t n, std::int64_t lo, std::int64_t hi, IntVector& cur,
                      const std::function<void(const IntVector&)>& visit) {
  if (cur.size() == n) {
    visit(cur);
    return;
  }
  for (std::int64_t x = cur.empty() ? lo : cur.back(); x <= hi; ++x) {
    cur.push_back(x);
    dominant_weights(n, lo, hi, cur, visit);
    cur.pop_back();
  }
}

Outcome gz_weyl() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (std::size_t n : {2, 3, 4}) {
    const WeightPoly f = weyl_polynomial(RootSystem::type_a(n));
    const auto z = ShiftedLattice::standard(gz_dimension(n));
    IntVector cur;
    dominant_weights(n, 0, 5, cur, [&](const IntVector& lam) {
      ++t.cases;
      const Vector lv = to_vector(lam);
      const auto count = count_n(gz_polytope(n, lv), z);
      if (Rational(count) != f(lv)) t.fail(to_string(lv) + ": " + std::to_string(count) + " vs " + f(lv).str());
      if (count != oracle::gz_pattern_count(lam)) t.fail(to_string(lv) + ": pattern oracle");
    });
  }
  const double secs = seconds_since(t0);
  if (secs >= 120) t.fail("took " + fmt_seconds(secs));
  return t.done(std::to_string(t.cases) + " weights, " + fmt_seconds(secs));
}

Outcome flag_genus() {
  Tally t;
  for (std::int64_t m = 1; m <= 6; ++m) {
    auto r = genus(Scenario{FlagScenario{RootSystem::type_a(2), {ints({0, m})}}});
    if (!r.chi || *r.chi != Rational(m)) t.fail("m=" + std::to_string(m));
  }
  return t.done("GL(2), m = 1..6");
}

Outcome virtual_inverse() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1006);
  Tally t;
  for (; t.cases < 36; ++t.cases) {
    const std::size_t d = 1 + t.cases % 3;
    const Polytope p = Polytope::hull(random_points(rng, d, 1 + rng() % 6, 3));
    const auto prod = ConvexChain::of(p) * inverse_of_polytope(p);
    if (!prod.normalized().same_terms(ConvexChain::unit(d))) t.fail("normal form of product for " + p.str());
    if (!(prod == ConvexChain::unit(d))) t.fail("product differs from the unit for " + p.str());
  }
  return t.done(std::to_string(t.cases) + " polytopes, " + fmt_seconds(seconds_since(t0)));
}

Outcome reciprocity() {
  std::mt19937_64 rng(1007);
  Tally t;
  for (; t.cases < 40; ++t.cases) {
    const std::size_t d = 1 + t.cases % 3;
    const bool weyl = t.cases % 2 == 1;
    const auto pts = random_points(rng, d, 1 + rng() % 5, 3);
    const Polytope p = Polytope::hull(pts);
    const WeightPoly w = weyl ? weyl_polynomial(RootSystem::type_a(d)) : WeightPoly::constant_one(d);
    const auto z = ShiftedLattice::standard(d);
    const std::size_t degree = p.dim() + weight_degree(p, w);
    const std::string tag = p.str() + (weyl ? " (Weyl weight)" : " (weight 1)");
    try {
      auto poly = interpolate_dilation([&](std::int64_t m) { return sum_s(p.dilated(m), z, w); }, degree);
      if (poly(-1) != sum_s_prime(p, z, w)) t.fail(tag + ": value at -1");
      if (!weyl) {
        std::int64_t sign = p.dim() % 2 == 0 ? 1 : -1;
        const auto interior = static_cast<std::int64_t>(oracle::brute_lattice_points(pts, true).size());
        if (poly(-1) != Rational(sign * interior) || count_n_prime(p, z) != sign * interior) t.fail(tag + ": N'");
      }
    } catch (const std::domain_error& e) {
      t.fail(tag + ": " + e.what());
    }
  }
  return t.done(std::to_string(t.cases) + " polytopes");
}

Outcome no_moment_agreement() {
  std::mt19937_64 rng(1008);
  Tally t;
  std::size_t rows = 0;
  for (; t.cases < 12; ++t.cases) {
    const std::size_t n = 2 + t.cases % 2;
    const std::size_t k = 1 + (t.cases / 2) % 2;
    std::vector<std::vector<Vector>> weights;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vector> ws;
      for (std::size_t j = 0; j < 1 + rng() % 3; ++j) {
        auto v = random_points(rng, n, 1, 2)[0];
        std::sort(v.begin(), v.end());
        ws.push_back(v);
      }
      weights.push_back(ws);
    }
    HorosphericalScenario h{RootSystem::type_a(n), standard_basis(n), weights,
                            std::vector<Vector>(k, zero_vector(n)), ConeChoice::gz, {}, std::nullopt};
    auto r = genus(Scenario{h});
    for (const auto& row : r.rows) {
      ++rows;
      if (!row.cross_term) {
        t.fail("missing NO term");
      } else if (*row.cross_term != row.term) {
        t.fail("GL(" + std::to_string(n) + ") subset " + std::to_string(row.subset.size()) + ": " + row.term.str() +
               " vs " + row.cross_term->str());
      }
    }
  }
  return t.done(std::to_string(t.cases) + " scenarios, " + std::to_string(rows) + " subset terms");
}

Outcome dependence() {
  std::mt19937_64 rng(1009);
  Tally t;
  {
    const std::vector<Vector> a{ints({0, 0}), ints({1, 0})};
    const std::vector<Vector> b{ints({0, 0}), ints({2, 0})};
    auto r = genus(toric(2, {a, b}));
    if (r.independent || r.chi) t.fail("parallel segments reported independent");
  }
  std::size_t degenerate = 0;
  for (; degenerate < 12; ++degenerate) {
    Scenario s;
    switch (degenerate % 4) {
      case 0: {
        // Two segments on a common random line.
        const auto dir = random_points(rng, 2, 1, 3)[0];
        const Vector v = dir == zero_vector(2) ? ints({1, 1}) : dir;
        const Rational a(1 + static_cast<std::int64_t>(rng() % 3));
        const Rational b(1 + static_cast<std::int64_t>(rng() % 3));
        s = toric(2, {{zero_vector(2), a * v}, {zero_vector(2), b * v}});
        break;
      }
      case 1: {
        // Three polytopes inside the plane z = 0 of 3-space.
        std::vector<std::vector<Vector>> sup;
        for (int i = 0; i < 3; ++i) {
          auto pts = random_points(rng, 3, 4, 3);
          for (auto& p : pts) p[2] = 0;
          sup.push_back(pts);
        }
        s = toric(3, sup);
        break;
      }
      case 2: {
        // A single monomial.
        auto full = full_dim_points(rng, 2, 3);
        s = toric(2, {full, random_points(rng, 2, 1, 3)});
        break;
      }
      default: {
        // Two flag conditions on the GL(2) flag curve.
        const std::int64_t m1 = 1 + static_cast<std::int64_t>(rng() % 3);
        const std::int64_t m2 = 1 + static_cast<std::int64_t>(rng() % 3);
        s = Scenario{FlagScenario{RootSystem::type_a(2), {ints({0, m1}), ints({0, m2})}}};
      }
    }
    if (is_independent(s) || genus(s).independent) t.fail("degenerate scenario " + std::to_string(degenerate));
  }
  std::size_t full = 0;
  for (; full < 12; ++full) {
    const std::size_t n = 1 + full % 3;
    std::vector<std::vector<Vector>> sup;
    for (std::size_t i = 0; i < 1 + full % n; ++i) sup.push_back(full_dim_points(rng, n, 3));
    if (!is_independent(toric(n, sup))) t.fail("full-dimensional scenario " + std::to_string(full));
  }
  return t.done("parallel segments, " + std::to_string(degenerate) + " degenerate, " + std::to_string(full) +
                " full-dimensional");
}

Outcome hp0_threefolds() {
  std::mt19937_64 rng(1010);
  Tally t;
  std::size_t with_interior = 0;
  for (; t.cases < 15; ++t.cases) {
    const auto pts = full_dim_points(rng, 3, 3);
    auto r = genus(toric(3, {pts}));
    const auto interior = static_cast<std::int64_t>(oracle::brute_lattice_points(pts, true).size());
    with_interior += interior > 0;
    const std::string tag = Polytope::hull(pts).str();
    if (r.hp0.size() != 3) {
      t.fail(tag + ": expected three entries");
      continue;
    }
    for (const auto& e : r.hp0) {
      if (e.status != Hp0Status::exact) t.fail(tag + ": p=" + std::to_string(e.p) + " not exact");
    }
    if (*r.hp0[0].value != Rational(1)) t.fail(tag + ": h00");
    if (*r.hp0[1].value != Rational(0)) t.fail(tag + ": h10");
    if (*r.hp0[2].value != *r.chi - Rational(1)) t.fail(tag + ": h20 vs chi");
    if (*r.hp0[2].value != Rational(interior)) t.fail(tag + ": h20 vs interior count");
  }
  if (with_interior == 0) t.fail("no sample had interior points");
  return t.done(std::to_string(t.cases) + " surfaces, " + std::to_string(with_interior) + " with interior points");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bkk equivalence", bkk_equivalence},
      {"plane curve genus", plane_curves},
      {"two squares in the torus", two_squares},
      {"gz count equals weyl dimension", gz_weyl},
      {"flag variety genus", flag_genus},
      {"virtual polytope inverse", virtual_inverse},
      {"dilation reciprocity", reciprocity},
      {"newton-okounkov and moment terms agree", no_moment_agreement},
      {"dependence detection", dependence},
      {"h^{p,0} for surfaces in 3-space", hp0_threefolds},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << o.detail << ")"
              << std::endl;
  }
  return all ? 0 : 1;
}
