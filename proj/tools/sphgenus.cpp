#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sphgenus/counts.hpp"
#include "sphgenus/genus.hpp"
#include "sphgenus/io.hpp"
#include "sphgenus/string_cone.hpp"
#include "sphgenus/verify.hpp"

using namespace sphgenus;

namespace {

enum Exit : int { ok = 0, usage = 2, dependent = 3, check_failed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Output {
  bool json = false;
  std::string path;

  void emit(const io::Json& machine, const std::string& human) const {
    const std::string text = machine.dump(2) + "\n";
    if (!path.empty()) {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw UsageError("cannot write " + path);
      out << text;
    }
    std::cout << (json ? text : human);
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_flag("--json", out.json, "Print machine-readable JSON");
  cmd->add_option("-o,--output", out.path, "Also write the JSON output to a file");
}

Vector parse_weight(const std::string& text) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError("malformed weight entry \"" + item + "\"");
    }
  }
  if (v.empty()) throw UsageError("empty weight");
  return v;
}

int cmd_genus(const std::string& path, const Output& out) {
  Scenario s = io::parse_scenario(slurp(path));
  GenusReport r = genus(s);
  out.emit(io::report_to_json(s, r), io::format_report(r));
  if (!r.independent) return dependent;
  return r.checks_passed() ? ok : check_failed;
}

int cmd_independence(const std::string& path, const Output& out) {
  Scenario s = io::parse_scenario(slurp(path));
  auto d = defects(s);
  out.emit(io::defects_to_json(s, d), io::format_defects(d));
  for (const auto& [j, v] : d) {
    if (v < 0) return dependent;
  }
  return ok;
}

int cmd_hp0(const std::string& path, const Output& out) {
  Scenario s = io::parse_scenario(slurp(path));
  GenusReport r = genus(s);
  io::Json j{{"kind", r.kind}, {"independent", r.independent}};
  if (r.chi) j["chi"] = r.chi->str();
  j["hp0"] = io::hp0_to_json(r);
  std::string human = r.independent ? "chi: " + r.chi->str() + "\n" + io::format_hp0(r) : "independent: no\n";
  out.emit(j, human);
  if (!r.independent) return dependent;
  return r.checks_passed() ? ok : check_failed;
}

struct CountArgs {
  std::string file;
  std::string polytope;
  std::string lattice;
  std::string mode = "closed";
  std::string root_system;
};

int cmd_count(const CountArgs& a, const Output& out) {
  if (a.file.empty() == a.polytope.empty()) throw UsageError("give exactly one of FILE or --polytope");
  Polytope p = io::parse_polytope(a.file.empty() ? a.polytope : slurp(a.file));
  const std::size_t r = p.ambient_dim();
  ShiftedLattice lattice = a.lattice.empty() ? ShiftedLattice::standard(r) : io::parse_lattice(a.lattice, r);
  const bool weighted = a.mode == "S" || a.mode == "Sinterior" || a.mode == "Sprime";
  if (!weighted && !a.root_system.empty()) throw UsageError("--root-system only applies to the S modes");
  WeightPoly w = WeightPoly::constant_one(r);
  if (weighted && !a.root_system.empty()) {
    RootSystem rs = io::parse_root_system(a.root_system);
    if (rs.rank_ambient() != r) throw UsageError("root system rank does not match the polytope dimension");
    w = weyl_polynomial(rs);
  }
  Rational value;
  if (a.mode == "closed") value = count_n(p, lattice);
  else if (a.mode == "interior") value = count_n_interior(p, lattice);
  else if (a.mode == "nprime") value = count_n_prime(p, lattice);
  else if (a.mode == "S") value = sum_s(p, lattice, w);
  else if (a.mode == "Sinterior") value = sum_s_interior(p, lattice, w);
  else if (a.mode == "Sprime") value = sum_s_prime(p, lattice, w);
  else throw UsageError("unknown mode \"" + a.mode + "\"");
  out.emit(io::Json{{"mode", a.mode}, {"value", value.str()}}, value.str() + "\n");
  return ok;
}

struct GzArgs {
  std::size_t n = 0;
  std::string lambda;
  bool count = false;
  bool vertices = false;
  bool hrep = false;
};

int cmd_gz(const GzArgs& a, const Output& out) {
  Vector lambda = parse_weight(a.lambda);
  if (lambda.size() != a.n) throw UsageError("lambda needs " + std::to_string(a.n) + " entries");
  Polytope p = [&] {
    try {
      return gz_polytope(a.n, lambda);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (int(a.count) + int(a.vertices) + int(a.hrep) > 1) throw UsageError("choose one of --count, --vertices, --hrep");
  if (a.vertices || a.hrep) {
    io::Json j = a.vertices ? io::polytope_to_json(p) : io::polytope_constraints_json(p);
    out.emit(j, j.dump(2) + "\n");
    return ok;
  }
  const auto c = count_n(p, ShiftedLattice::standard(p.ambient_dim()));
  out.emit(io::Json{{"n", a.n}, {"lambda", to_string(lambda)}, {"count", c}}, std::to_string(c) + "\n");
  return ok;
}

int cmd_mixed_volume(const std::string& path, const Output& out) {
  Rational v = mixed_volume(io::parse_polytope_list(slurp(path)));
  out.emit(io::Json{{"mixed_volume", v.str()}}, v.str() + "\n");
  return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> trials, const Output& out) {
  const std::size_t n = trials ? *trials : verify::default_trials(suite);
  auto result = verify::run_suite(suite, seed, n);
  io::Json failures = io::Json::array();
  std::ostringstream human;
  human << "suite " << suite << ": " << n << " trials, seed " << seed << ", " << result.failures.size()
        << " failures\n";
  for (const auto& f : result.failures) {
    failures.push_back({{"trial", f.trial},
                        {"case", verify::describe(f.original)},
                        {"minimized", verify::describe(f.minimized)},
                        {"message", f.message}});
    human << "  trial " << f.trial << ": " << f.message << "\n    minimized counterexample: "
          << verify::describe(f.minimized) << '\n';
  }
  human << (result.passed() ? "PASS\n" : "FAIL\n");
  out.emit(io::Json{{"suite", suite}, {"seed", seed}, {"trials", n}, {"passed", result.passed()}, {"failures", failures}},
           human.str());
  return result.passed() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic genus and lattice-point tools for complete intersections in spherical spaces"};
  app.require_subcommand(1);
  Output out;

  std::string path;
  auto* genus_cmd = app.add_subcommand("genus", "Arithmetic genus report for a scenario file");
  genus_cmd->add_option("scenario", path, "Scenario JSON file")->required();
  add_output_flags(genus_cmd, out);

  auto* indep_cmd = app.add_subcommand("independence", "Defect table for a scenario file");
  indep_cmd->add_option("scenario", path, "Scenario JSON file")->required();
  add_output_flags(indep_cmd, out);

  auto* hp0_cmd = app.add_subcommand("hp0", "h^{p,0} values and bounds for a scenario file");
  hp0_cmd->add_option("scenario", path, "Scenario JSON file")->required();
  add_output_flags(hp0_cmd, out);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Lattice-point counts and weighted sums");
  count_cmd->add_option("file", count.file, "Polytope JSON file");
  count_cmd->add_option("--polytope", count.polytope, "Polytope literal, e.g. \"[0,2]\" or {\"vertices\": ...}");
  count_cmd->add_option("--lattice", count.lattice, "{\"basis\": [...], \"shift\": [...]} (default: integer lattice)");
  count_cmd->add_option("--mode", count.mode, "closed, interior, nprime, S, Sinterior or Sprime")
      ->check(CLI::IsMember({"closed", "interior", "nprime", "S", "Sinterior", "Sprime"}));
  count_cmd->add_option("--root-system", count.root_system, "Weyl weight for the S modes, e.g. A2");
  add_output_flags(count_cmd, out);

  GzArgs gz;
  auto* gz_cmd = app.add_subcommand("gz", "Gelfand-Zetlin polytope for GL(n)");
  gz_cmd->add_option("-n", gz.n, "Rank n")->required();
  gz_cmd->add_option("--lambda", gz.lambda, "Weakly increasing top row, comma separated")->required();
  gz_cmd->add_flag("--count", gz.count, "Print the lattice-point count (default)");
  gz_cmd->add_flag("--vertices", gz.vertices, "Print the vertices");
  gz_cmd->add_flag("--hrep", gz.hrep, "Print the inequalities");
  add_output_flags(gz_cmd, out);

  auto* mv_cmd = app.add_subcommand("mixed-volume", "Mixed volume of n polytopes in n-space");
  mv_cmd->add_option("file", path, "JSON list of polytope literals")->required();
  add_output_flags(mv_cmd, out);

  std::string suite, suite_flag;
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  auto* verify_cmd = app.add_subcommand("verify", "Seeded randomized property suites");
  auto* suite_pos = verify_cmd->add_option("name", suite, "Suite: chains, reciprocity, gz or bkk");
  auto* suite_opt = verify_cmd->add_option("--suite", suite_flag, "Same as the positional argument");
  suite_pos->excludes(suite_opt);
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--trials", trials, "Number of trials (default depends on the suite)");
  add_output_flags(verify_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (genus_cmd->parsed()) return cmd_genus(path, out);
    if (indep_cmd->parsed()) return cmd_independence(path, out);
    if (hp0_cmd->parsed()) return cmd_hp0(path, out);
    if (count_cmd->parsed()) return cmd_count(count, out);
    if (gz_cmd->parsed()) return cmd_gz(gz, out);
    if (mv_cmd->parsed()) return cmd_mixed_volume(path, out);
    if (verify_cmd->parsed()) {
      if (suite.empty()) suite = suite_flag;
      if (suite.empty()) throw UsageError("verify needs a suite: chains, reciprocity, gz or bkk");
      return cmd_verify(suite, seed, trials, out);
    }
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return check_failed;
  }
  return usage;
}
