#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sphgenus/genus.hpp"
#include "sphgenus/lattice.hpp"
#include "sphgenus/polytope.hpp"
#include "sphgenus/root_system.hpp"
#include "sphgenus/scenario.hpp"

namespace sphgenus::io {

using Json = nlohmann::ordered_json;

/// Syntax or schema problem in a JSON document, anchored at a 1-based line and column.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Scenario file text. Throws InputError for syntax errors, schema violations
/// and scenarios rejected by validate().
Scenario parse_scenario(std::string_view text);
Json scenario_to_json(const Scenario& s);

/// Polytope literal: {"vertices": [...]}, {"inequalities": [...], "equalities": [...]},
/// a bare list of points, or a two-number interval such as [0,2].
Polytope parse_polytope(std::string_view text);
/// A list of polytope literals, bare or as {"polytopes": [...]}.
std::vector<Polytope> parse_polytope_list(std::string_view text);
Json polytope_to_json(const Polytope& p);
/// Same polytope as {"inequalities": ..., "equalities": ...}; normal · x <= offset.
Json polytope_constraints_json(const Polytope& p);

/// {"type":"A","n":3}, {"positive_roots":[...],"pairing":[...]}, or the shorthand "A3".
RootSystem parse_root_system(std::string_view text);

/// {"basis": [...], "shift": [...]}; either key may be omitted.
ShiftedLattice parse_lattice(std::string_view text, std::size_t ambient_dim);

/// Rationals are written as strings "p/q" (or "p").
Json rational_to_json(const Rational& q);

Json report_to_json(const Scenario& s, const GenusReport& r);
Json defects_to_json(const Scenario& s, const std::map<Subset, std::int64_t>& d);
Json hp0_to_json(const GenusReport& r);

std::string format_report(const GenusReport& r);
std::string format_defects(const std::map<Subset, std::int64_t>& d);
std::string format_hp0(const GenusReport& r);
std::string format_subset(const Subset& j);

}  // namespace sphgenus::io
