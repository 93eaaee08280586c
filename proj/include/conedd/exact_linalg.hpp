#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conedd {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
IntVector unit_vector(std::size_t dim, std::size_t index);

/// Rectangular integer matrix with an explicit column count, so a matrix
/// with no rows still knows its width.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t cols = 0) : cols_(cols) {}
  IntMatrix(std::size_t cols, std::vector<IntVector> rows);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add_row(IntVector row);
  /// Appends the unit row e_index.
  void add_unit_row(std::size_t index);

  const IntVector& row(std::size_t i) const { return rows_[i]; }
  std::span<const IntVector> row_span() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<IntVector> rows_;
};

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by nullspace_ray when the nullspace is not a single line.
class NullityError : public LinalgError {
 public:
  NullityError(std::size_t nullity);
  std::size_t nullity() const { return nullity_; }

 private:
  std::size_t nullity_;
};

/// Thrown by nullspace_ray when the generator has entries of both signs.
class MixedSignError : public LinalgError {
 public:
  using LinalgError::LinalgError;
};

Integer dot(std::span<const Integer> m, std::span<const Integer> v);

/// Divides by the gcd of the absolute values; flips the sign when no entry
/// is positive.
IntVector gcd_normalize(IntVector v);

/// Divides in place by the gcd of the entries (absolute values). Returns false
/// and leaves `v` untouched when all entries are zero.
bool divide_by_content(std::span<Integer> v);

std::size_t rank(const IntMatrix& m);

/// Integer basis of {x : m x = 0}, one primitive vector per free column.
std::vector<IntVector> nullspace_basis(const IntMatrix& m);

/// The primitive non-negative generator of a one-dimensional nullspace.
IntVector nullspace_ray(const IntMatrix& m);

std::string to_string(std::span<const Integer> v);

}  // namespace conedd
