#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sphgenus/linalg.hpp"

namespace sphgenus::verify {

/// A generated test input: a list of integer point sets.
using Case = std::vector<std::vector<IntVector>>;

/// Failure description, or nothing when the property holds.
using Property = std::function<std::optional<std::string>(const Case&)>;

struct Failure {
  std::size_t trial = 0;
  Case original;
  Case minimized;
  std::string message;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// chains, reciprocity, gz, bkk
const std::vector<std::string>& suite_names();

/// Default trial count for a suite.
std::size_t default_trials(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials);

/// Greedy shrinking: repeatedly drops points and moves coordinates toward 0
/// while the case keeps failing.
Case shrink(Case c, const Property& property);

std::string describe(const Case& c);

}  // namespace sphgenus::verify
