#include "sphgenus/genus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sphgenus/counts.hpp"

namespace sphgenus {

namespace {

std::string subset_label(const Subset& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + "}";
}

struct RowResult {
  SubsetRow row;
  std::vector<Check> checks;
};

RowResult evaluate_row(const Scenario& s, const Subset& j) {
  RowResult out;
  SubsetRow& row = out.row;
  row.subset = j;
  SubsetPolytope sp = subset_polytope(s, j);
  row.moment_dim = sp.moment.dim();
  row.weight_degree = weight_degree(sp.moment, sp.weight);
  row.defect = static_cast<std::int64_t>(row.moment_dim + row.weight_degree) - static_cast<std::int64_t>(j.size());

  const bool flag = std::holds_alternative<FlagScenario>(s.data);
  const bool toric = std::holds_alternative<ToricScenario>(s.data);
  if (toric) {
    row.term = count_n_prime(sp.moment, sp.lattice);
    row.interior = count_n_interior(sp.moment, sp.lattice);
    row.no_dim = row.moment_dim;
  } else if (flag) {
    row.term = count_n_prime(*sp.no_polytope, *sp.no_lattice);
    row.interior = count_n_interior(*sp.no_polytope, *sp.no_lattice);
    row.no_dim = sp.no_polytope->dim();
    row.cross_term = sum_s_prime(sp.moment, sp.lattice, sp.weight);
  } else {
    row.term = sum_s_prime(sp.moment, sp.lattice, sp.weight);
    if (sp.no_polytope) {
      row.cross_term = count_n_prime(*sp.no_polytope, *sp.no_lattice);
      row.interior = count_n_interior(*sp.no_polytope, *sp.no_lattice);
      row.no_dim = sp.no_polytope->dim();
    } else {
      row.interior = sum_s_interior(sp.moment, sp.lattice, sp.weight);
      row.no_dim = row.moment_dim + row.weight_degree;
    }
  }

  const std::string label = subset_label(j);
  if (row.cross_term) {
    bool ok = *row.cross_term == row.term;
    out.checks.push_back({"term routes agree for J=" + label, ok,
                          "moment route " + (flag ? row.cross_term->str() : row.term.str()) + ", NO route " +
                              (flag ? row.term.str() : row.cross_term->str())});
  }
  if (sp.no_polytope) {
    bool ok = row.no_dim == row.moment_dim + row.weight_degree;
    if (!ok) {
      out.checks.push_back({"NO dimension for J=" + label, false,
                            "dim NO polytope " + std::to_string(row.no_dim) + " but dim + d = " +
                                std::to_string(row.moment_dim + row.weight_degree)});
    }
  }
  return out;
}

std::vector<RowResult> evaluate_rows(const Scenario& s) {
  validate(s);
  const auto subsets = nonempty_subsets(s.k());
  std::vector<RowResult> results(subsets.size());
  const std::size_t workers = std::min(worker_threads(), subsets.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < subsets.size(); ++i) results[i] = evaluate_row(s, subsets[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < subsets.size(); i = next++) {
        try {
          results[i] = evaluate_row(s, subsets[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

Rational parity(std::size_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

void fill_hp0(GenusReport& report) {
  if (!report.independent || !report.chi || report.variety_dim < report.k) return;
  const std::size_t top = report.variety_dim - report.k;
  for (std::size_t p = 0; p <= top; ++p) {
    Hp0Entry e;
    e.p = p;
    Rational delta = p == 0 ? 1 : 0;
    auto pi = static_cast<std::int64_t>(p);
    if (report.critical_numbers.count(pi)) {
      Rational bound = delta;
      for (const auto& row : report.rows) {
        if (row.defect == pi) bound += row.interior;
      }
      e.status = Hp0Status::upper_bound;
      e.bound = bound;
    } else {
      e.status = Hp0Status::exact;
      e.value = delta;
    }
    report.hp0.push_back(e);
  }
  if (top == 0) return;
  for (std::size_t p = 0; p < top; ++p) {
    if (report.critical_numbers.count(static_cast<std::int64_t>(p))) return;
  }
  Rational value = parity(top) * (*report.chi - 1);
  Hp0Entry& last = report.hp0.back();
  if (last.status == Hp0Status::exact && *last.value != value) {
    report.checks.push_back({"h^{p,0} consistency at p=" + std::to_string(top), false,
                             "non-critical value " + last.value->str() + " but genus gives " + value.str()});
    return;
  }
  if (last.bound && value > *last.bound) {
    report.checks.push_back({"h^{p,0} bound at p=" + std::to_string(top), false,
                             "genus gives " + value.str() + " above the bound " + last.bound->str()});
  }
  last.status = Hp0Status::exact;
  last.value = value;
}

}  // namespace

bool GenusReport::checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::size_t worker_threads() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPHGENUS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), hw);
  }
  return hw;
}

std::map<Subset, std::int64_t> defects(const Scenario& s) {
  validate(s);
  std::map<Subset, std::int64_t> out;
  for (const auto& j : nonempty_subsets(s.k())) {
    SubsetPolytope sp = subset_polytope(s, j);
    out[j] = static_cast<std::int64_t>(sp.moment.dim() + weight_degree(sp.moment, sp.weight)) -
             static_cast<std::int64_t>(j.size());
  }
  return out;
}

bool is_independent(const Scenario& s) {
  auto d = defects(s);
  return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second >= 0; });
}

GenusReport genus(const Scenario& s) {
  GenusReport report;
  report.kind = s.kind();
  report.k = s.k();
  auto results = evaluate_rows(s);
  report.variety_dim = variety_dimension(s);
  report.independent = true;
  for (auto& r : results) {
    report.independent = report.independent && r.row.defect >= 0;
    report.rows.push_back(std::move(r.row));
    for (auto& c : r.checks) report.checks.push_back(std::move(c));
  }
  if (!report.independent) return report;

  Rational chi = 1;
  for (const auto& row : report.rows) chi += parity(row.subset.size()) * row.term;
  report.chi = chi;
  if (!chi.is_integer()) report.checks.push_back({"genus is an integer", false, "got " + chi.str()});
  for (const auto& row : report.rows) {
    if (row.interior.sign() > 0) report.critical_numbers.insert(row.defect);
  }
  fill_hp0(report);
  return report;
}

std::set<std::int64_t> critical_numbers(const Scenario& s) { return genus(s).critical_numbers; }

std::vector<Hp0Entry> hp0_bounds(const Scenario& s) { return genus(s).hp0; }

Rational mixed_volume(const std::vector<Polytope>& polytopes) {
  const std::size_t n = polytopes.size();
  if (n == 0) throw std::invalid_argument("mixed_volume: no polytopes");
  for (const auto& p : polytopes) {
    if (p.ambient_dim() != n) throw std::invalid_argument("mixed_volume: need n polytopes in n-dimensional space");
  }
  if (n > kMaxSystems) throw std::invalid_argument("mixed_volume: too many polytopes");
  Rational total;
  for (const auto& j : nonempty_subsets(n)) {
    std::optional<Polytope> sum;
    for (auto i : j) sum = sum ? minkowski_sum(*sum, polytopes[i - 1]) : polytopes[i - 1];
    if (sum->dim() < n) continue;
    total += parity(n - j.size()) * volume(*sum);
  }
  Rational fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= Rational(static_cast<std::int64_t>(i));
  return total / fact;
}

}  // namespace sphgenus
