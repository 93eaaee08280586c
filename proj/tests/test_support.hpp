#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "conedd/cone_problem.hpp"
#include "conedd/triangulation.hpp"

namespace conedd::testing {

inline std::string fixture_path(const std::string& name) { return std::string(CONEDD_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline EnumerationProblem gieseking() { return parse_cone(read_fixture("gieseking.cone")); }

inline Triangulation load_triangulation(const std::string& name) { return parse_triangulation(read_fixture(name)); }

/// Random problem: d in [3, max_dim], up to max_eqs sparse rows with at most
/// four non-zeros in [-2, 2], and floor(d/3) disjoint groups of three.
inline EnumerationProblem random_problem(std::mt19937_64& rng, std::size_t max_dim = 12, std::size_t max_eqs = 6) {
  EnumerationProblem p;
  p.dim = 3 + rng() % (max_dim - 2);
  const std::size_t g = rng() % (max_eqs + 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (std::size_t i = 0; i < g; ++i) {
    IntVector row(p.dim);
    const std::size_t nz = 1 + rng() % 4;
    for (std::size_t t = 0; t < nz; ++t) row[rng() % p.dim] = coeff(rng);
    p.equations.push_back(std::move(row));
  }
  for (std::size_t k = 0; k + 3 <= p.dim && p.groups.size() < p.dim / 3; k += 3) p.groups.push_back({{k, k + 1, k + 2}});
  return p;
}

inline IntMatrix processed_matrix_with_units(const EnumerationProblem& p, std::span<const std::size_t> processed,
                                             const ZeroSet& z) {
  IntMatrix m(p.dim);
  for (std::size_t k : processed) m.add_row(p.equations[k]);
  for (std::size_t j : z.indices()) m.add_unit_row(j);
  return m;
}

}  // namespace conedd::testing
