#include "conedd/cone_problem.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "text_util.hpp"

namespace conedd {

void EnumerationProblem::validate() const {
  for (std::size_t i = 0; i < equations.size(); ++i)
    if (equations[i].size() != dim)
      throw std::invalid_argument("equation " + std::to_string(i) + " has length " +
                                  std::to_string(equations[i].size()) + ", expected " +
                                  std::to_string(dim));
  validate_groups(groups, dim);
}

EnumerationProblem parse_cone(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty cone file");

  std::size_t cursor = 0;
  const auto& header = lines[cursor++];
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be `d g`");
  EnumerationProblem p;
  p.dim = detail::parse_count(header.tokens[0], header.number);
  const std::size_t g = detail::parse_count(header.tokens[1], header.number);

  for (std::size_t i = 0; i < g; ++i) {
    if (cursor >= lines.size()) throw ParseError(header.number, "expected " + std::to_string(g) + " equation rows");
    const auto& line = lines[cursor++];
    if (line.tokens.size() != p.dim)
      throw ParseError(line.number, "row has " + std::to_string(line.tokens.size()) +
                                        " entries, expected " + std::to_string(p.dim));
    IntVector row;
    row.reserve(p.dim);
    for (const auto& tok : line.tokens) row.push_back(detail::parse_integer(tok, line.number));
    p.equations.push_back(std::move(row));
  }

  if (cursor < lines.size()) {
    const auto& gl = lines[cursor++];
    if (gl.tokens.size() != 2 || gl.tokens[0] != "groups")
      throw ParseError(gl.number, "expected `groups k`");
    const std::size_t k = detail::parse_count(gl.tokens[1], gl.number);
    for (std::size_t i = 0; i < k; ++i) {
      if (cursor >= lines.size()) throw ParseError(gl.number, "expected " + std::to_string(k) + " group lines");
      const auto& line = lines[cursor++];
      ConstraintGroup group;
      for (const auto& tok : line.tokens) group.indices.push_back(detail::parse_count(tok, line.number));
      p.groups.push_back(std::move(group));
    }
  }
  if (cursor < lines.size()) throw ParseError(lines[cursor].number, "unexpected trailing content");

  try {
    validate_groups(p.groups, p.dim);
  } catch (const std::invalid_argument& e) {
    throw ParseError(header.number, e.what());
  }
  return p;
}

std::string write_cone(const EnumerationProblem& p) {
  std::ostringstream os;
  os << p.dim << ' ' << p.equations.size() << '\n';
  for (const auto& row : p.equations) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  os << "groups " << p.groups.size() << '\n';
  for (const auto& g : p.groups) {
    for (std::size_t k = 0; k < g.indices.size(); ++k) os << (k ? " " : "") << g.indices[k];
    os << '\n';
  }
  return os.str();
}

bool admissible(const EnumerationProblem& p, std::span<const Integer> v) {
  if (v.size() != p.dim) return false;
  for (const auto& x : v)
    if (sgn(x) < 0) return false;
  for (const auto& row : p.equations)
    if (sgn(dot(row, v)) != 0) return false;
  for (const auto& g : p.groups) {
    std::size_t nonzero = 0;
    for (std::size_t k : g.indices) nonzero += sgn(v[k]) != 0 ? 1 : 0;
    if (nonzero > 1) return false;
  }
  return true;
}

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

Integer mcmullen_bound(long p, long f) {
  if (p < 0 || f < p)
    throw std::invalid_argument("McMullen bound needs f >= p >= 0, got p=" + std::to_string(p) +
                                " f=" + std::to_string(f));
  const long floor_half = p / 2;
  const long ceil_half = p - floor_half;
  return binomial(f - ceil_half, floor_half) + binomial(f - floor_half - 1, ceil_half - 1);
}

void canonicalize_rays(std::vector<IntVector>& rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

std::string write_rays(std::span<const IntVector> rays) {
  std::ostringstream os;
  os << "# rays " << rays.size() << '\n';
  for (const auto& r : rays) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
    os << '\n';
  }
  return os.str();
}

std::vector<IntVector> parse_rays(std::string_view text, std::size_t dim) {
  std::vector<IntVector> rays;
  std::optional<std::size_t> declared;
  std::size_t number = 0;
  // The `# rays R` header is a comment to the tokenizer, so pick it up first.
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = std::min(text.find('\n', pos), text.size());
    std::istringstream is(std::string(text.substr(pos, end - pos)));
    ++number;
    std::string hash, word;
    std::size_t count = 0;
    if (is >> hash >> word >> count && hash == "#" && word == "rays") {
      declared = count;
      break;
    }
    pos = end + 1;
  }
  for (const auto& line : detail::tokenize(text)) {
    if (line.tokens.size() != dim)
      throw ParseError(line.number, "ray has " + std::to_string(line.tokens.size()) +
                                        " entries, expected " + std::to_string(dim));
    IntVector r;
    r.reserve(dim);
    for (const auto& tok : line.tokens) r.push_back(detail::parse_integer(tok, line.number));
    rays.push_back(std::move(r));
  }
  if (declared && *declared != rays.size())
    throw ParseError(number, "header declares " + std::to_string(*declared) + " rays, found " +
                                 std::to_string(rays.size()));
  return rays;
}

}  // namespace conedd
