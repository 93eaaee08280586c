#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "conedd/cone_problem.hpp"

namespace conedd::detail {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

/// Splits into whitespace-separated tokens, dropping `#` comments and blank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parsed.tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline mpz_class parse_integer(const std::string& s, std::size_t line) {
  if (!is_integer_token(s)) throw ParseError(line, "expected an integer, got '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

inline std::size_t parse_count(const std::string& s, std::size_t line) {
  mpz_class v = parse_integer(s, line);
  if (sgn(v) < 0 || !v.fits_ulong_p()) throw ParseError(line, "expected a non-negative count, got '" + s + "'");
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace conedd::detail
