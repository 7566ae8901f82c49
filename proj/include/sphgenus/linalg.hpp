#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphgenus/rational.hpp"

namespace sphgenus {

using Vector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;
/// Row-major dense matrix; each entry of the outer vector is a row.
using Matrix = std::vector<Vector>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector to_vector(const IntVector& v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(std::span<const Rational> v);
bool is_integral(std::span<const Rational> v);

/// Scales a rational vector by a positive factor so it becomes a primitive integer vector.
IntVector primitive_integer(std::span<const Rational> v);
/// Divides out the gcd of the entries (sign preserved).
void make_primitive(IntVector& v);

std::string to_string(std::span<const Rational> v);

/// Reduced row echelon form computed in place; returns the pivot columns.
/// Zero rows are removed.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);

std::size_t rank(Matrix m, std::size_t ncols);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m, std::size_t ncols);

/// Solves m x = rhs. Returns nullopt if inconsistent; free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Determinant of a square matrix.
Rational determinant(Matrix m);

/// Canonical basis (RREF rows) of the linear span of the given vectors.
std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim);

}  // namespace sphgenus
