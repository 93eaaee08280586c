#include "conedd/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace conedd {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector unit_vector(std::size_t dim, std::size_t index) {
  IntVector v(dim);
  v.at(index) = 1;
  return v;
}

IntMatrix::IntMatrix(std::size_t cols, std::vector<IntVector> rows) : cols_(cols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) add_row(std::move(r));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) add_row(make_vector(r));
}

void IntMatrix::add_row(IntVector row) {
  if (row.size() != cols_)
    throw std::invalid_argument("row of length " + std::to_string(row.size()) +
                                " in matrix with " + std::to_string(cols_) + " columns");
  rows_.push_back(std::move(row));
}

void IntMatrix::add_unit_row(std::size_t index) { add_row(unit_vector(cols_, index)); }

NullityError::NullityError(std::size_t nullity)
    : LinalgError("expected a one-dimensional nullspace, found nullity " + std::to_string(nullity)),
      nullity_(nullity) {}

Integer dot(std::span<const Integer> m, std::span<const Integer> v) {
  if (m.size() != v.size())
    throw std::invalid_argument("dot product length mismatch: " + std::to_string(m.size()) +
                                " vs " + std::to_string(v.size()));
  Integer acc = 0;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (sgn(m[k]) != 0 && sgn(v[k]) != 0) mpz_addmul(acc.get_mpz_t(), m[k].get_mpz_t(), v[k].get_mpz_t());
  return acc;
}

bool divide_by_content(std::span<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return true;
  }
  if (g == 0) return false;
  for (auto& x : v)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return true;
}

IntVector gcd_normalize(IntVector v) {
  if (!divide_by_content(v)) throw std::invalid_argument("cannot normalize the zero vector");
  if (std::none_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) > 0; }))
    for (auto& x : v) x = -x;
  return v;
}

namespace {

struct Echelon {
  std::vector<IntVector> rows;     // first pivots.size() rows are the pivot rows
  std::vector<std::size_t> pivots;  // pivot column of each pivot row
};

// Bareiss fraction-free forward elimination. Every division is exact, so all
// intermediate entries stay integral minors of the input.
Echelon bareiss(const IntMatrix& m) {
  Echelon e;
  e.rows.assign(m.row_span().begin(), m.row_span().end());
  auto& a = e.rows;
  const std::size_t nrows = a.size();
  const std::size_t ncols = m.cols();
  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        // a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev
        mpz_mul(t.get_mpz_t(), a[r][c].get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<IntVector> nullspace_basis(const IntMatrix& m) {
  const Echelon e = bareiss(m);
  const std::size_t ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  Integer s, g, scale;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    IntVector x(ncols);
    x[f] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t c = e.pivots[r];
      const IntVector& row = e.rows[r];
      s = 0;
      for (std::size_t j = c + 1; j < ncols; ++j)
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0)
          mpz_addmul(s.get_mpz_t(), row[j].get_mpz_t(), x[j].get_mpz_t());
      if (sgn(s) == 0) continue;
      mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(scale.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      if (scale != 1)
        for (auto& xi : x)
          if (sgn(xi) != 0) xi *= scale;
      mpz_divexact(x[c].get_mpz_t(), s.get_mpz_t(), g.get_mpz_t());
      x[c] = -x[c];
    }
    divide_by_content(x);
    if (sgn(x[f]) < 0)
      for (auto& xi : x) xi = -xi;
    basis.push_back(std::move(x));
  }
  return basis;
}

IntVector nullspace_ray(const IntMatrix& m) {
  auto basis = nullspace_basis(m);
  if (basis.size() != 1) throw NullityError(basis.size());
  IntVector& r = basis.front();
  const bool any_pos = std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) > 0; });
  const bool any_neg = std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) < 0; });
  if (any_pos && any_neg) throw MixedSignError("nullspace generator has mixed signs: " + to_string(r));
  if (any_neg)
    for (auto& x : r) x = -x;
  return std::move(r);
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace conedd
