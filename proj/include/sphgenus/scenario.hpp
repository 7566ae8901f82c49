#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sphgenus/lattice.hpp"
#include "sphgenus/polytope.hpp"
#include "sphgenus/root_system.hpp"
#include "sphgenus/string_cone.hpp"
#include "sphgenus/weight_poly.hpp"

namespace sphgenus {

/// 1-based indices of linear systems, strictly increasing.
using Subset = std::vector<std::size_t>;

enum class ConeChoice { gz, none, custom };

struct ToricScenario {
  std::size_t n = 0;
  std::vector<std::vector<Vector>> supports;
  friend bool operator==(const ToricScenario&, const ToricScenario&) = default;
};

struct HorosphericalScenario {
  RootSystem root_system;
  std::vector<IntVector> lattice_basis;
  std::vector<std::vector<Vector>> weights;
  std::vector<Vector> shifts;
  ConeChoice cone = ConeChoice::gz;
  StringCone custom_cone;
  std::optional<std::size_t> variety_dim;
  friend bool operator==(const HorosphericalScenario&, const HorosphericalScenario&) = default;
};

struct GroupScenario {
  RootSystem root_system;
  std::vector<std::vector<Vector>> representations;
  std::optional<std::vector<IntVector>> lattice_basis;
  friend bool operator==(const GroupScenario&, const GroupScenario&) = default;
};

struct FlagScenario {
  RootSystem root_system;
  std::vector<Vector> weights;
  friend bool operator==(const FlagScenario&, const FlagScenario&) = default;
};

struct GenericSphericalScenario {
  RootSystem root_system;
  std::vector<IntVector> lattice_basis;
  std::vector<Vector> shifts;
  bool additive = false;
  std::map<Subset, Polytope> moment_polytopes;
  ConeChoice cone = ConeChoice::none;
  StringCone custom_cone;
  std::optional<std::size_t> variety_dim;
  friend bool operator==(const GenericSphericalScenario&, const GenericSphericalScenario&) = default;
};

struct Scenario {
  std::variant<ToricScenario, HorosphericalScenario, GroupScenario, FlagScenario, GenericSphericalScenario> data;

  [[nodiscard]] std::size_t k() const;
  [[nodiscard]] std::string kind() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr std::size_t kMaxSystems = 16;

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const Scenario& s);

/// Subsets ordered by size, then lexicographically.
std::vector<Subset> nonempty_subsets(std::size_t k);

/// Data attached to one subset J.
struct SubsetPolytope {
  Polytope moment;          // Δ_J (for flag scenarios, the single weight Σλ_i)
  ShiftedLattice lattice;   // Λ′ shifted by the combined shift
  WeightPoly weight;        // Weyl weight (1 for toric)
  std::optional<Polytope> no_polytope;        // Δ̃_J when a string cone is known
  std::optional<ShiftedLattice> no_lattice;   // lattice for Δ̃_J
};

SubsetPolytope subset_polytope(const Scenario& s, const Subset& j);

/// Dimension of the ambient homogeneous space.
std::size_t variety_dimension(const Scenario& s);

}  // namespace sphgenus
