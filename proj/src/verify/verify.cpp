#include "sphgenus/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sphgenus/chain.hpp"
#include "sphgenus/counts.hpp"
#include "sphgenus/genus.hpp"
#include "sphgenus/root_system.hpp"
#include "sphgenus/string_cone.hpp"

namespace sphgenus::verify {

namespace {

using Generator = std::function<Case(std::mt19937_64&)>;

struct Suite {
  std::size_t trials;
  Generator generate;
  Property property;
};

std::vector<IntVector> random_set(std::mt19937_64& rng, std::size_t d, std::size_t count, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> coord(0, hi);
  std::vector<IntVector> pts(count, IntVector(d));
  for (auto& p : pts) {
    for (auto& x : p) x = coord(rng);
  }
  return pts;
}

Polytope hull_of(const std::vector<IntVector>& pts) {
  std::vector<Vector> v;
  for (const auto& p : pts) v.push_back(to_vector(p));
  return Polytope::hull(v);
}

std::optional<std::string> guarded(const Property& p, const Case& c) {
  try {
    return p(c);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

std::optional<std::string> chains_property(const Case& c) {
  const Polytope p = hull_of(c[0]);
  const Polytope q = hull_of(c[1]);
  const std::size_t d = p.ambient_dim();
  auto prod = ConvexChain::of(p) * inverse_of_polytope(p);
  auto normal = prod.normalized();
  if (!normal.same_terms(ConvexChain::unit(d))) {
    return "chi_P * inverse(P) normalizes to " + normal.str() + " instead of the unit";
  }
  auto pq = ConvexChain::of(p) * ConvexChain::of(q);
  if (!pq.same_terms(ConvexChain::of(minkowski_sum(p, q)))) return "chi_P * chi_Q is not chi_{P+Q}";
  if (!(pq == ConvexChain::of(q) * ConvexChain::of(p))) return "product is not commutative";
  return std::nullopt;
}

std::optional<std::string> reciprocity_property(const Case& c) {
  const Polytope p = hull_of(c[0]);
  const std::size_t d = p.ambient_dim();
  const bool weyl = !c[1].empty() && !c[1][0].empty() && c[1][0][0] % 2 == 1;
  const WeightPoly w = weyl ? weyl_polynomial(RootSystem::type_a(d)) : WeightPoly::constant_one(d);
  const auto z = ShiftedLattice::standard(d);
  const std::size_t degree = p.dim() + weight_degree(p, w);
  auto poly = interpolate_dilation([&](std::int64_t m) { return sum_s(p.dilated(m), z, w); }, degree);
  const Rational direct = sum_s_prime(p, z, w);
  if (poly(-1) != direct) {
    return "dilation polynomial " + poly.str() + " gives " + poly(-1).str() + " at -1 but S' = " + direct.str();
  }
  if (!weyl && Rational(count_n_prime(p, z)) != direct) return "S' with trivial weight differs from N'";
  return std::nullopt;
}

std::optional<std::string> gz_property(const Case& c) {
  IntVector lam = c[0][0];
  std::sort(lam.begin(), lam.end());
  const std::size_t n = lam.size();
  const Vector lv = to_vector(lam);
  const auto count = count_n(gz_polytope(n, lv), ShiftedLattice::standard(gz_dimension(n)));
  const Rational f = weyl_polynomial(RootSystem::type_a(n))(lv);
  if (Rational(count) != f) {
    return "GZ count " + std::to_string(count) + " but Weyl dimension " + f.str() + " for " + to_string(lv);
  }
  return std::nullopt;
}

std::optional<std::string> bkk_property(const Case& c) {
  const std::size_t n = c.size();
  ToricScenario t{n, {}};
  std::vector<Polytope> polys;
  for (const auto& set : c) {
    std::vector<Vector> v;
    for (const auto& p : set) v.push_back(to_vector(p));
    t.supports.push_back(v);
    polys.push_back(Polytope::hull(v));
  }
  auto report = genus(Scenario{t});
  if (!report.independent) return std::nullopt;
  Rational fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= Rational(static_cast<std::int64_t>(i));
  const Rational expect = fact * mixed_volume(polys);
  if (*report.chi != expect) return "chi = " + report.chi->str() + " but n! * V = " + expect.str();
  if (!report.checks_passed()) return "report has failed checks";
  return std::nullopt;
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"chains",
       {30,
        [](std::mt19937_64& rng) {
          std::size_t d = 1 + rng() % 3;
          return Case{random_set(rng, d, 1 + rng() % 5, 3), random_set(rng, d, 1 + rng() % 4, 2)};
        },
        chains_property}},
      {"reciprocity",
       {30,
        [](std::mt19937_64& rng) {
          std::size_t d = 1 + rng() % 3;
          return Case{random_set(rng, d, 1 + rng() % 5, 3), {IntVector{static_cast<std::int64_t>(rng() % 2)}}};
        },
        reciprocity_property}},
      {"gz",
       {40,
        [](std::mt19937_64& rng) {
          std::size_t n = 2 + rng() % 3;
          return Case{random_set(rng, n, 1, 5)};
        },
        gz_property}},
      {"bkk",
       {50,
        [](std::mt19937_64& rng) {
          std::size_t n = 1 + rng() % 3;
          Case c;
          for (std::size_t i = 0; i < n; ++i) c.push_back(random_set(rng, n, n + 1 + rng() % 2, 4));
          return c;
        },
        bkk_property}},
  };
  return table;
}

const Suite& find_suite(const std::string& name) {
  auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"chains", "reciprocity", "gz", "bkk"};
  return names;
}

std::size_t default_trials(const std::string& suite) { return find_suite(suite).trials; }

Case shrink(Case c, const Property& property) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Case> candidates;
    for (std::size_t s = 0; s < c.size(); ++s) {
      for (std::size_t i = 0; c[s].size() > 1 && i < c[s].size(); ++i) {
        Case next = c;
        next[s].erase(next[s].begin() + static_cast<std::ptrdiff_t>(i));
        candidates.push_back(std::move(next));
      }
    }
    for (std::size_t s = 0; s < c.size(); ++s) {
      for (std::size_t i = 0; i < c[s].size(); ++i) {
        for (std::size_t j = 0; j < c[s][i].size(); ++j) {
          const std::int64_t x = c[s][i][j];
          if (x == 0) continue;
          for (std::int64_t y : {std::int64_t{0}, x / 2, x > 0 ? x - 1 : x + 1}) {
            if (y == x) continue;
            Case next = c;
            next[s][i][j] = y;
            candidates.push_back(std::move(next));
          }
        }
      }
    }
    for (auto& cand : candidates) {
      if (guarded(property, cand)) {
        c = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return c;
}

std::string describe(const Case& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (s) os << ", ";
    os << '{';
    for (std::size_t i = 0; i < c[s].size(); ++i) {
      if (i) os << ", ";
      os << to_string(to_vector(c[s][i]));
    }
    os << '}';
  }
  os << ']';
  return os.str();
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t trials) {
  const Suite& suite = find_suite(name);
  SuiteResult result{name, seed, trials, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Case c = suite.generate(rng);
    if (guarded(suite.property, c)) {
      Case small = shrink(c, suite.property);
      result.failures.push_back({t, c, small, *guarded(suite.property, small)});
    }
  }
  return result;
}

}  // namespace sphgenus::verify
