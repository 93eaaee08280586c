#include "conedd/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

namespace conedd {

OrderingStrategy OrderingStrategy::parse(std::string_view text) {
  if (text == "input") return input();
  if (text == "position") return position();
  if (text == "lexpos") return lex_positive();
  if (text == "dynamic") return dynamic();
  constexpr std::string_view kRand = "lexrand:";
  if (text.starts_with(kRand)) {
    std::string_view digits = text.substr(kRand.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return lex_random(seed);
  }
  throw std::invalid_argument("unknown ordering '" + std::string(text) +
                              "' (expected input|position|lexpos|lexrand:<seed>|dynamic)");
}

std::string OrderingStrategy::str() const {
  switch (kind) {
    case Kind::Input: return "input";
    case Kind::PositionVector: return "position";
    case Kind::LexPositiveFirst: return "lexpos";
    case Kind::LexRandomSigns: return "lexrand:" + std::to_string(seed);
    case Kind::Dynamic: return "dynamic";
  }
  return "?";
}

std::vector<std::uint8_t> position_vector(std::span<const Integer> row) {
  std::vector<std::uint8_t> p(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) p[k] = sgn(row[k]) != 0 ? 1 : 0;
  return p;
}

namespace {

template <typename Key>
std::vector<std::size_t> stable_order_by(const std::vector<Key>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return order;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

std::vector<std::size_t> order_static(const EnumerationProblem& p, OrderingStrategy s) {
  const auto& rows = p.equations;
  switch (s.kind) {
    case OrderingStrategy::Kind::Input: {
      std::vector<std::size_t> order(rows.size());
      std::iota(order.begin(), order.end(), 0);
      return order;
    }
    case OrderingStrategy::Kind::PositionVector: {
      std::vector<std::vector<std::uint8_t>> keys;
      keys.reserve(rows.size());
      for (const auto& r : rows) keys.push_back(position_vector(r));
      return stable_order_by(keys);
    }
    case OrderingStrategy::Kind::LexPositiveFirst: {
      std::vector<IntVector> keys;
      keys.reserve(rows.size());
      for (const auto& r : rows) {
        auto first = std::find_if(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
        keys.push_back(first != r.end() && sgn(*first) < 0 ? negated(r) : r);
      }
      return stable_order_by(keys);
    }
    case OrderingStrategy::Kind::LexRandomSigns: {
      std::mt19937_64 rng(s.seed);
      std::vector<IntVector> keys;
      keys.reserve(rows.size());
      for (const auto& r : rows) keys.push_back((rng() & 1u) ? negated(r) : r);
      return stable_order_by(keys);
    }
    case OrderingStrategy::Kind::Dynamic:
      break;
  }
  throw std::invalid_argument("order_static: dynamic ordering is chosen per step, use choose_dynamic");
}

std::size_t choose_dynamic(std::span<const std::size_t> unprocessed, std::span<const IntVector> vertices,
                           const EnumerationProblem& p) {
  const std::size_t k = choose_dynamic(unprocessed, vertices.size(), [&](std::size_t c, std::size_t j) {
    return sgn(dot(p.equations[unprocessed[c]], vertices[j]));
  });
  return unprocessed[k];
}

}  // namespace conedd
