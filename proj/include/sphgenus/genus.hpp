#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphgenus/scenario.hpp"

namespace sphgenus {

struct SubsetRow {
  Subset subset;
  std::size_t moment_dim = 0;    // dim Δ_J
  std::size_t weight_degree = 0; // d_J
  std::size_t no_dim = 0;        // dim Δ̃_J
  std::int64_t defect = 0;       // d(J)
  Rational term;                 // N′ or S′
  Rational interior;             // N° of the J-th polytope (S° when no string cone)
  std::optional<Rational> cross_term;  // same term by the other route
  friend bool operator==(const SubsetRow&, const SubsetRow&) = default;
};

enum class Hp0Status { exact, upper_bound };

struct Hp0Entry {
  std::size_t p = 0;
  Hp0Status status = Hp0Status::upper_bound;
  std::optional<Rational> value;
  std::optional<Rational> bound;
  friend bool operator==(const Hp0Entry&, const Hp0Entry&) = default;
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct GenusReport {
  std::string kind;
  std::size_t k = 0;
  std::size_t variety_dim = 0;
  bool independent = false;
  std::vector<SubsetRow> rows;
  std::optional<Rational> chi;
  std::set<std::int64_t> critical_numbers;
  std::vector<Hp0Entry> hp0;
  std::vector<Check> checks;

  [[nodiscard]] bool checks_passed() const;
};

/// d(J) = dim Δ_J + d_J − |J| for every nonempty J.
std::map<Subset, std::int64_t> defects(const Scenario& s);
bool is_independent(const Scenario& s);

/// Full computation. Subset terms run on up to SPHGENUS_THREADS threads.
GenusReport genus(const Scenario& s);

std::set<std::int64_t> critical_numbers(const Scenario& s);
std::vector<Hp0Entry> hp0_bounds(const Scenario& s);

/// V(Δ_1, ..., Δ_n) for n polytopes in ℝ^n.
Rational mixed_volume(const std::vector<Polytope>& polytopes);

/// Worker count from SPHGENUS_THREADS (default: hardware concurrency).
std::size_t worker_threads();

}  // namespace sphgenus
