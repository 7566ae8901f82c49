#include "sphgenus/scenario.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sphgenus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_dim(const Vector& v, std::size_t r, const std::string& what) {
  if (v.size() != r) fail(what + " has dimension " + std::to_string(v.size()) + ", expected " + std::to_string(r));
}

void require_type_a(const RootSystem& rs, const std::string& kind) {
  if (!rs.type_a_rank()) fail(kind + " scenarios need the built-in type A root system");
}

Vector sum_of(const std::vector<Vector>& vs, const Subset& j, std::size_t r) {
  Vector s = zero_vector(r);
  for (auto i : j) s = s + vs[i - 1];
  return s;
}

Polytope sum_of_hulls(const std::vector<std::vector<Vector>>& sets, const Subset& j) {
  std::optional<Polytope> acc;
  for (auto i : j) {
    Polytope p = Polytope::hull(sets[i - 1]);
    acc = acc ? minkowski_sum(*acc, p) : p;
  }
  return *acc;
}

/// Λ′ ⊕ ℤ^f with shift (shift, 0).
ShiftedLattice extend_lattice(const ShiftedLattice& base, std::size_t fiber_dim) {
  const std::size_t r = base.ambient_dim();
  const std::size_t total = r + fiber_dim;
  std::vector<IntVector> basis;
  for (const auto& b : base.basis()) {
    IntVector v(total, 0);
    std::copy(b.begin(), b.end(), v.begin());
    basis.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < fiber_dim; ++i) {
    IntVector v(total, 0);
    v[r + i] = 1;
    basis.push_back(std::move(v));
  }
  Vector shift = zero_vector(total);
  std::copy(base.shift().begin(), base.shift().end(), shift.begin());
  return ShiftedLattice(total, std::move(basis), std::move(shift));
}

std::optional<StringCone> resolve_cone(const RootSystem& rs, ConeChoice choice, const StringCone& custom) {
  switch (choice) {
    case ConeChoice::gz:
      return gz_cone(*rs.type_a_rank());
    case ConeChoice::custom:
      return custom;
    case ConeChoice::none:
      break;
  }
  return std::nullopt;
}

void validate_cone(const RootSystem& rs, ConeChoice choice, const StringCone& custom) {
  if (choice == ConeChoice::gz && !rs.type_a_rank()) fail("string cone \"GZ\" needs a type A root system");
  if (choice == ConeChoice::custom) {
    if (custom.weight_dim != rs.rank_ambient()) fail("string cone weight dimension does not match the root system");
    for (const auto& row : custom.rows) {
      if (row.size() != custom.weight_dim + custom.fiber_dim) fail("string cone row has wrong length");
    }
  }
}

std::size_t roots_moving(const RootSystem& rs, const std::vector<Vector>& vectors) {
  std::size_t count = 0;
  for (const auto& a : rs.positive_roots()) {
    for (const auto& v : vectors) {
      if (!rs.pair(v, a).is_zero()) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

std::size_t Scenario::k() const {
  return std::visit(overloaded{
                        [](const ToricScenario& t) { return t.supports.size(); },
                        [](const HorosphericalScenario& h) { return h.weights.size(); },
                        [](const GroupScenario& g) { return g.representations.size(); },
                        [](const FlagScenario& f) { return f.weights.size(); },
                        [](const GenericSphericalScenario& g) { return g.shifts.size(); },
                    },
                    data);
}

std::string Scenario::kind() const {
  static const char* names[] = {"toric", "horospherical", "group", "flag", "generic_spherical"};
  return names[data.index()];
}

std::vector<Subset> nonempty_subsets(std::size_t k) {
  if (k > kMaxSystems) fail("at most " + std::to_string(kMaxSystems) + " linear systems are supported");
  std::vector<Subset> out;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    Subset j;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) j.push_back(i + 1);
    }
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

void validate(const Scenario& s) {
  const std::size_t k = s.k();
  if (k < 1) fail("a scenario needs at least one linear system");
  if (k > kMaxSystems) fail("at most " + std::to_string(kMaxSystems) + " linear systems are supported");
  std::visit(
      overloaded{
          [&](const ToricScenario& t) {
            if (k > t.n) fail("toric scenarios need k <= n");
            for (std::size_t i = 0; i < k; ++i) {
              if (t.supports[i].empty()) fail("support " + std::to_string(i + 1) + " is empty");
              for (const auto& p : t.supports[i]) {
                require_dim(p, t.n, "support point");
                if (!is_integral(p)) fail("toric support points must be integral");
              }
            }
          },
          [&](const HorosphericalScenario& h) {
            const auto& rs = h.root_system;
            const std::size_t r = rs.rank_ambient();
            if (h.shifts.size() != k) fail("need one shift per linear system");
            validate_cone(rs, h.cone, h.custom_cone);
            for (std::size_t i = 0; i < k; ++i) {
              require_dim(h.shifts[i], r, "shift");
              ShiftedLattice lat(r, h.lattice_basis, h.shifts[i]);
              if (h.weights[i].empty()) fail("weight set " + std::to_string(i + 1) + " is empty");
              for (const auto& w : h.weights[i]) {
                require_dim(w, r, "weight");
                if (!rs.is_dominant(w)) fail("weight " + to_string(w) + " is not dominant");
                if (!lat.contains(w)) {
                  fail("weight " + to_string(w) + " is not in shift " + to_string(h.shifts[i]) + " + lattice");
                }
              }
            }
          },
          [&](const GroupScenario& g) {
            require_type_a(g.root_system, "group");
            const std::size_t r = g.root_system.rank_ambient();
            if (g.lattice_basis) (void)ShiftedLattice(r, *g.lattice_basis, zero_vector(r));
            for (const auto& rep : g.representations) {
              if (rep.empty()) fail("representation with no highest weights");
              for (const auto& w : rep) {
                require_dim(w, r, "highest weight");
                if (!g.root_system.is_dominant(w)) fail("highest weight " + to_string(w) + " is not dominant");
              }
            }
          },
          [&](const FlagScenario& f) {
            require_type_a(f.root_system, "flag");
            for (const auto& w : f.weights) {
              require_dim(w, f.root_system.rank_ambient(), "weight");
              if (!is_integral(w)) fail("flag weights must be integral");
              if (!f.root_system.is_dominant(w)) fail("weight " + to_string(w) + " is not dominant");
            }
          },
          [&](const GenericSphericalScenario& g) {
            const std::size_t r = g.root_system.rank_ambient();
            validate_cone(g.root_system, g.cone, g.custom_cone);
            for (const auto& a : g.shifts) require_dim(a, r, "shift");
            (void)ShiftedLattice(r, g.lattice_basis, zero_vector(r));
            for (const auto& [j, p] : g.moment_polytopes) {
              if (j.empty() || !std::is_sorted(j.begin(), j.end()) || j.back() > k || j.front() < 1) {
                fail("moment polytope keyed by an invalid subset");
              }
              if (p.ambient_dim() != r) fail("moment polytope has the wrong ambient dimension");
            }
            for (const auto& j : nonempty_subsets(k)) {
              if (g.additive && j.size() > 1) continue;
              if (!g.moment_polytopes.count(j)) {
                std::string key;
                for (auto i : j) key += (key.empty() ? "" : ",") + std::to_string(i);
                fail("missing moment polytope for subset {" + key + "}");
              }
            }
          },
      },
      s.data);
}

SubsetPolytope subset_polytope(const Scenario& s, const Subset& j) {
  if (j.empty()) fail("subset_polytope: empty subset");
  if (j.back() > s.k()) fail("subset_polytope: index out of range");
  return std::visit(
      overloaded{
          [&](const ToricScenario& t) -> SubsetPolytope {
            return {sum_of_hulls(t.supports, j), ShiftedLattice::standard(t.n), WeightPoly::constant_one(t.n),
                    std::nullopt, std::nullopt};
          },
          [&](const HorosphericalScenario& h) -> SubsetPolytope {
            const auto& rs = h.root_system;
            const std::size_t r = rs.rank_ambient();
            Polytope delta = sum_of_hulls(h.weights, j);
            ShiftedLattice lat(r, h.lattice_basis, sum_of(h.shifts, j, r));
            SubsetPolytope out{delta, lat, weyl_polynomial(rs), std::nullopt, std::nullopt};
            if (auto cone = resolve_cone(rs, h.cone, h.custom_cone)) {
              out.no_polytope = no_polytope(delta, *cone);
              out.no_lattice = extend_lattice(lat, cone->fiber_dim);
            }
            return out;
          },
          [&](const GroupScenario& g) -> SubsetPolytope {
            const auto& rs = g.root_system;
            const std::size_t n = rs.rank_ambient();
            std::optional<Polytope> delta;
            for (auto i : j) {
              Polytope p = weight_polytope(rs, g.representations[i - 1]).dominant;
              delta = delta ? minkowski_sum(*delta, p) : p;
            }
            ShiftedLattice lat = g.lattice_basis ? ShiftedLattice(n, *g.lattice_basis, zero_vector(n))
                                                 : ShiftedLattice::standard(n);
            WeightPoly f = weyl_polynomial(rs);
            Matrix dual(n, zero_vector(n));
            for (std::size_t i = 0; i < n; ++i) dual[i][n - 1 - i] = -1;
            WeightPoly w = f * f.pulled_back(dual, zero_vector(n));
            StringCone cone = group_gz_cone(n);
            Polytope no = no_polytope(*delta, cone);
            return {*delta, lat, w, no, extend_lattice(lat, cone.fiber_dim)};
          },
          [&](const FlagScenario& f) -> SubsetPolytope {
            const auto& rs = f.root_system;
            const std::size_t n = rs.rank_ambient();
            Vector lambda = sum_of(f.weights, j, n);
            ShiftedLattice point_lattice(n, {}, lambda);
            Polytope gz = gz_polytope(n, lambda);
            return {Polytope::point(lambda), point_lattice, weyl_polynomial(rs), gz,
                    ShiftedLattice::standard(gz.ambient_dim())};
          },
          [&](const GenericSphericalScenario& g) -> SubsetPolytope {
            const auto& rs = g.root_system;
            const std::size_t r = rs.rank_ambient();
            std::optional<Polytope> delta;
            if (auto it = g.moment_polytopes.find(j); it != g.moment_polytopes.end()) {
              delta = it->second;
            } else if (g.additive) {
              for (auto i : j) {
                const Polytope& p = g.moment_polytopes.at(Subset{i});
                delta = delta ? minkowski_sum(*delta, p) : p;
              }
            } else {
              fail("missing moment polytope for a subset of a non-additive scenario");
            }
            ShiftedLattice lat(r, g.lattice_basis, sum_of(g.shifts, j, r));
            SubsetPolytope out{*delta, lat, weyl_polynomial(rs), std::nullopt, std::nullopt};
            if (auto cone = resolve_cone(rs, g.cone, g.custom_cone)) {
              out.no_polytope = no_polytope(*delta, *cone);
              out.no_lattice = extend_lattice(lat, cone->fiber_dim);
            }
            return out;
          },
      },
      s.data);
}

std::size_t variety_dimension(const Scenario& s) {
  return std::visit(
      overloaded{
          [](const ToricScenario& t) { return t.n; },
          [](const HorosphericalScenario& h) {
            if (h.variety_dim) return *h.variety_dim;
            std::vector<Vector> spanning;
            for (const auto& b : h.lattice_basis) spanning.push_back(to_vector(b));
            spanning.insert(spanning.end(), h.shifts.begin(), h.shifts.end());
            for (const auto& ws : h.weights) spanning.insert(spanning.end(), ws.begin(), ws.end());
            return h.lattice_basis.size() + roots_moving(h.root_system, spanning);
          },
          [](const GroupScenario& g) {
            return g.root_system.rank_ambient() + 2 * g.root_system.positive_roots().size();
          },
          [](const FlagScenario& f) { return f.root_system.positive_roots().size(); },
          [](const GenericSphericalScenario& g) {
            if (g.variety_dim) return *g.variety_dim;
            std::vector<Vector> spanning;
            for (const auto& b : g.lattice_basis) spanning.push_back(to_vector(b));
            spanning.insert(spanning.end(), g.shifts.begin(), g.shifts.end());
            for (const auto& [j, p] : g.moment_polytopes) {
              spanning.insert(spanning.end(), p.vertices().begin(), p.vertices().end());
            }
            return g.lattice_basis.size() + roots_moving(g.root_system, spanning);
          },
      },
      s.data);
}

}  // namespace sphgenus
