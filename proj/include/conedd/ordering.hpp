#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conedd/cone_problem.hpp"

namespace conedd {

/// Order in which the engine intersects the equation hyperplanes.
struct OrderingStrategy {
  enum class Kind {
    Input,             // construction order
    PositionVector,    // lexicographic on the support indicator of each row
    LexPositiveFirst,  // rows signed so the first non-zero is positive, then sorted
    LexRandomSigns,    // rows signed by a seeded generator, then sorted
    Dynamic,           // chosen on the fly to minimise |S+| * |S-|
  };

  Kind kind = Kind::PositionVector;
  std::uint64_t seed = 0;  // LexRandomSigns only

  static OrderingStrategy input() { return {Kind::Input, 0}; }
  static OrderingStrategy position() { return {Kind::PositionVector, 0}; }
  static OrderingStrategy lex_positive() { return {Kind::LexPositiveFirst, 0}; }
  static OrderingStrategy lex_random(std::uint64_t seed) { return {Kind::LexRandomSigns, seed}; }
  static OrderingStrategy dynamic() { return {Kind::Dynamic, 0}; }

  /// Accepts input|position|lexpos|lexrand:<seed>|dynamic.
  static OrderingStrategy parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const OrderingStrategy&, const OrderingStrategy&) = default;
};

std::vector<std::uint8_t> position_vector(std::span<const Integer> row);

/// A permutation of 0..g-1 giving the processing order of the equations.
std::vector<std::size_t> order_static(const EnumerationProblem& p, OrderingStrategy s);

/// Index into `candidates` of the hyperplane with the fewest (+,-) pairs; ties
/// go to the lowest candidate position. `signs(k, j)` returns the sign of
/// equation candidates[k] at vertex j for j in 0..num_vertices-1.
template <typename SignFn>
std::size_t choose_dynamic(std::span<const std::size_t> candidates, std::size_t num_vertices, SignFn&& signs) {
  if (candidates.empty()) throw std::invalid_argument("choose_dynamic: no unprocessed hyperplanes");
  std::size_t best = 0;
  std::uint64_t best_pairs = UINT64_MAX;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    std::uint64_t pos = 0, neg = 0;
    for (std::size_t j = 0; j < num_vertices; ++j) {
      const int s = signs(k, j);
      pos += s > 0;
      neg += s < 0;
    }
    const std::uint64_t pairs = pos * neg;
    if (pairs < best_pairs) {
      best_pairs = pairs;
      best = k;
      if (pairs == 0) break;
    }
  }
  return best;
}

/// Convenience form over explicit coordinates: returns the chosen equation index.
std::size_t choose_dynamic(std::span<const std::size_t> unprocessed, std::span<const IntVector> vertices,
                           const EnumerationProblem& p);

}  // namespace conedd
