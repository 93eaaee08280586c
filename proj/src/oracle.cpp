#include "conedd/oracle.hpp"

#include <algorithm>
#include <bit>

namespace conedd {

namespace {

// Equations plus one unit row for each index in the mask.
IntMatrix system_with_units(const EnumerationProblem& p, std::uint64_t mask) {
  IntMatrix m(p.dim, p.equations);
  for (std::size_t k = 0; k < p.dim; ++k)
    if ((mask >> k) & 1u) m.add_unit_row(k);
  return m;
}

}  // namespace

bool is_extreme(const EnumerationProblem& p, std::span<const Integer> r) {
  if (r.size() != p.dim) return false;
  IntMatrix m(p.dim, p.equations);
  bool nonzero = false;
  for (std::size_t k = 0; k < p.dim; ++k) {
    if (sgn(r[k]) == 0)
      m.add_unit_row(k);
    else
      nonzero = true;
  }
  return nonzero && rank(m) + 1 == p.dim;
}

std::vector<IntVector> brute_force_rays(const EnumerationProblem& p, const OracleLimit& limit) {
  p.validate();
  const std::size_t d = p.dim;
  if (d > limit.max_dim || d >= 64)
    throw OracleLimitError("oracle limited to d <= " + std::to_string(limit.max_dim) + ", got d=" + std::to_string(d));
  if ((std::uint64_t{1} << d) > limit.max_subsets)
    throw OracleLimitError("oracle would examine 2^" + std::to_string(d) + " subsets, over the limit");

  const std::size_t base_rank = rank(IntMatrix(d, p.equations));
  // Fewer unit rows than this cannot bring the nullity down to one.
  const std::size_t min_size = d > 2 + base_rank ? d - 2 - base_rank : 0;

  std::vector<IntVector> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
    auto basis = nullspace_basis(system_with_units(p, mask));
    if (basis.size() != 1) continue;
    IntVector& r = basis.front();
    const bool any_pos = std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) > 0; });
    const bool any_neg = std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) < 0; });
    if (any_pos && any_neg) continue;
    if (any_neg)
      for (auto& x : r) x = -x;
    found.push_back(std::move(r));
  }
  canonicalize_rays(found);
  std::erase_if(found, [&](const IntVector& r) { return !is_extreme(p, r); });
  return found;
}

std::vector<IntVector> brute_force_filtered(const EnumerationProblem& p, const OracleLimit& limit) {
  auto rays = brute_force_rays(p, limit);
  std::erase_if(rays, [&](const IntVector& r) { return !admissible(p, r); });
  return rays;
}

}  // namespace conedd
