#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conedd/cone_problem.hpp"

namespace conedd {

struct OracleLimit {
  std::size_t max_dim = 14;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extreme rays of {x >= 0 : equations} by exhaustive search over candidate
/// zero sets. Each ray is primitive and non-negative; the result is sorted.
std::vector<IntVector> brute_force_rays(const EnumerationProblem& p, const OracleLimit& limit = {});

/// brute_force_rays restricted to admissible rays.
std::vector<IntVector> brute_force_filtered(const EnumerationProblem& p, const OracleLimit& limit = {});

/// True iff r is a non-zero extreme ray of the cone: the equations together
/// with x_k = 0 for each zero coordinate have rank d - 1.
bool is_extreme(const EnumerationProblem& p, std::span<const Integer> r);

}  // namespace conedd
