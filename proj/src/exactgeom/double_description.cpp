#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <stdexcept>

namespace sphgenus::detail {

namespace {

__int128 inner(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zeros;
};

IntVector reduce(const std::vector<__int128>& w) {
  __int128 g = 0;
  for (auto x : w) {
    __int128 a = x < 0 ? -x : x;
    while (a != 0) {
      __int128 t = g % a;
      g = a;
      a = t;
    }
  }
  IntVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = narrow_checked(g > 1 ? w[i] / g : w[i]);
  return out;
}

}  // namespace

ConeRays extreme_rays(const std::vector<IntVector>& rows, std::size_t d) {
  ConeRays result;
  if (d == 0) return result;
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("extreme_rays: row length mismatch");
  }

  // Greedy choice of d independent rows.
  std::vector<std::size_t> basis;
  Matrix reduced;
  for (std::size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    Matrix trial = reduced;
    trial.push_back(to_vector(rows[i]));
    if (rank(trial, d) > reduced.size()) {
      reduced = std::move(trial);
      basis.push_back(i);
    }
  }
  if (basis.size() < d) {
    result.pointed = false;
    return result;
  }

  const std::size_t m = rows.size();
  Matrix b;
  for (auto i : basis) b.push_back(to_vector(rows[i]));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    auto col = solve(b, unit_vector(d, j));
    Ray ray{primitive_integer(*col), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < d; ++i) {
      if (i != j) ray.zeros.set(basis[i]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;
  std::vector<std::size_t> processed(basis.begin(), basis.end());

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis[row]) continue;
    const IntVector& a = rows[row];
    std::vector<std::size_t> pos, neg;
    std::vector<__int128> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = inner(a, rays[r].v);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(row);
    }
    processed.push_back(row);
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] >= 0) next.push_back(rays[r]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<__int128> w(d);
        for (std::size_t i = 0; i < d; ++i) {
          w[i] = val[p] * rays[n].v[i] - val[n] * rays[p].v[i];
        }
        Ray fresh{reduce(w), boost::dynamic_bitset<>(m)};
        for (auto q : processed) {
          if (inner(rows[q], fresh.v) == 0) fresh.zeros.set(q);
        }
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  for (auto& r : rays) result.rays.push_back(std::move(r.v));
  return result;
}

}  // namespace sphgenus::detail
