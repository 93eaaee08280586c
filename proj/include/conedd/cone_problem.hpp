#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conedd/exact_linalg.hpp"
#include "conedd/zeroset.hpp"

namespace conedd {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The cone {x >= 0 : m.x = 0 for every equation}, plus the groups in which
/// at most one coordinate may be non-zero.
struct EnumerationProblem {
  std::size_t dim = 0;
  std::vector<IntVector> equations;
  std::vector<ConstraintGroup> groups;

  std::size_t num_equations() const { return equations.size(); }
  IntMatrix equation_matrix() const { return IntMatrix(dim, equations); }

  /// Throws std::invalid_argument on ragged rows or invalid groups.
  void validate() const;

  friend bool operator==(const EnumerationProblem&, const EnumerationProblem&) = default;
};

/// Format: `d g`, g rows of d integers, `groups k`, k lines of indices.
/// Blank lines and `#` comments are ignored.
EnumerationProblem parse_cone(std::string_view text);
std::string write_cone(const EnumerationProblem& p);

bool admissible(const EnumerationProblem& p, std::span<const Integer> v);

/// Upper bound on the vertex count of a p-dimensional polytope with f facets.
Integer mcmullen_bound(long p, long f);

/// Sorts lexicographically and removes duplicates.
void canonicalize_rays(std::vector<IntVector>& rays);

/// Output format: `# rays R` then one ray per line.
std::string write_rays(std::span<const IntVector> rays);
std::vector<IntVector> parse_rays(std::string_view text, std::size_t dim);

}  // namespace conedd
