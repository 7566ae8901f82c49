#include "sphgenus/weight_poly.hpp"

#include <stdexcept>

namespace sphgenus {

WeightPoly::WeightPoly(std::size_t arity, Rational scale, std::vector<AffineForm> factors)
    : arity_(arity), scale_(scale), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.linear.size() != arity_) throw std::invalid_argument("weight polynomial factor has wrong arity");
  }
}

WeightPoly WeightPoly::constant_one(std::size_t arity) { return WeightPoly(arity, 1, {}); }

std::size_t WeightPoly::degree() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += !is_zero(f.linear);
  return d;
}

Rational WeightPoly::operator()(std::span<const Rational> x) const {
  if (x.size() != arity_) throw std::invalid_argument("weight polynomial evaluated at wrong arity");
  Rational v = scale_;
  for (const auto& f : factors_) {
    if (v.is_zero()) break;
    v *= f(x);
  }
  return v;
}

WeightPoly WeightPoly::reflected() const {
  std::vector<AffineForm> fs;
  for (const auto& f : factors_) fs.push_back({-f.linear, f.constant});
  return WeightPoly(arity_, scale_, std::move(fs));
}

WeightPoly WeightPoly::pulled_back(const Matrix& m, const Vector& offset) const {
  if (m.size() != arity_ || offset.size() != arity_) {
    throw std::invalid_argument("pulled_back: matrix does not match arity");
  }
  std::size_t new_arity = m.empty() ? 0 : m.front().size();
  std::vector<AffineForm> fs;
  for (const auto& f : factors_) {
    Vector lin = zero_vector(new_arity);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (f.linear[i].is_zero()) continue;
      for (std::size_t j = 0; j < new_arity; ++j) lin[j] += f.linear[i] * m[i][j];
    }
    fs.push_back({lin, f.constant + dot(f.linear, offset)});
  }
  return WeightPoly(new_arity, scale_, std::move(fs));
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("weight polynomial product: arity mismatch");
  std::vector<AffineForm> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return WeightPoly(a.arity_, a.scale_ * b.scale_, std::move(fs));
}

}  // namespace sphgenus
