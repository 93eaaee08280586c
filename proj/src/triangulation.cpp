#include "conedd/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace conedd {

Perm4 Perm4::parse(std::string_view images) {
  if (images.size() != 4) throw std::invalid_argument("permutation must have 4 images");
  std::array<int, 4> v{};
  unsigned seen = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    int x = images[i] - '0';
    if (x < 0 || x > 3 || (seen & (1u << x)))
      throw std::invalid_argument("'" + std::string(images) + "' is not a permutation of 0123");
    seen |= 1u << x;
    v[i] = x;
  }
  return Perm4(v[0], v[1], v[2], v[3]);
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int v = 0; v < 4; ++v) inv[static_cast<std::size_t>((*this)[v])] = v;
  return Perm4(inv[0], inv[1], inv[2], inv[3]);
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int v = 0; v < 4; ++v) s[static_cast<std::size_t>(v)] = static_cast<char>('0' + (*this)[v]);
  return s;
}

void Triangulation::join(std::size_t tet, int face, std::size_t target, Perm4 perm) {
  if (tet >= size() || target >= size()) throw TriangulationError("join: tetrahedron index out of range");
  const int partner_face = perm[face];
  if (tet == target && partner_face == face) throw TriangulationError("join: face glued to itself");
  auto& mine = tets_[tet][static_cast<std::size_t>(face)];
  auto& theirs = tets_[target][static_cast<std::size_t>(partner_face)];
  if (mine || theirs) throw TriangulationError("join: face already glued");
  mine = Gluing{target, perm};
  theirs = Gluing{tet, perm.inverse()};
}

void Triangulation::validate() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tets_[i][static_cast<std::size_t>(f)];
      if (!g) continue;
      const std::string where = "tetrahedron " + std::to_string(i) + " face " + std::to_string(f);
      if (g->tet >= size()) throw TriangulationError(where + ": target " + std::to_string(g->tet) + " out of range");
      const int pf = g->perm[f];
      if (g->tet == i && pf == f) throw TriangulationError(where + ": face glued to itself");
      const auto& back = tets_[g->tet][static_cast<std::size_t>(pf)];
      if (!back || back->tet != i || !(back->perm == g->perm.inverse()))
        throw TriangulationError(where + ": gluing is not an involution (tetrahedron " +
                                 std::to_string(g->tet) + " face " + std::to_string(pf) +
                                 " does not glue back via " + g->perm.inverse().str() + ")");
    }
  }
}

std::size_t Triangulation::boundary_faces() const {
  std::size_t n = 0;
  for (const auto& faces : tets_)
    for (const auto& g : faces) n += g ? 0 : 1;
  return n;
}

Triangulation parse_triangulation(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty triangulation file");
  if (lines[0].tokens.size() != 1) throw ParseError(lines[0].number, "first line must be the tetrahedron count");
  const std::size_t n = detail::parse_count(lines[0].tokens[0], lines[0].number);
  if (lines.size() != n + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " tetrahedron lines, found " +
                                              std::to_string(lines.size() - 1));

  // Faces are filled one side at a time; validate() then checks both sides agree.
  std::vector<Triangulation::Faces> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    if (line.tokens.size() != 4) throw ParseError(line.number, "expected 4 face tokens");
    for (std::size_t f = 0; f < 4; ++f) {
      const std::string& tok = line.tokens[f];
      if (tok == "-") continue;
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError(line.number, "bad face token '" + tok + "'");
      const std::size_t target = detail::parse_count(tok.substr(0, colon), line.number);
      if (target >= n) throw ParseError(line.number, "target tetrahedron " + std::to_string(target) + " out of range");
      try {
        raw[i][f] = Gluing{target, Perm4::parse(std::string_view(tok).substr(colon + 1))};
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    }
  }

  Triangulation t(n);
  // Replay as joins from the lower side; any mismatch surfaces in validate().
  for (std::size_t i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = raw[i][static_cast<std::size_t>(f)];
      if (!g) continue;
      const int pf = g->perm[f];
      if (g->tet == i && pf == f)
        throw TriangulationError("tetrahedron " + std::to_string(i) + " face " + std::to_string(f) +
                                 ": face glued to itself");
      const auto& back = raw[g->tet][static_cast<std::size_t>(pf)];
      if (!back || back->tet != i || !(back->perm == g->perm.inverse()))
        throw TriangulationError("tetrahedron " + std::to_string(i) + " face " + std::to_string(f) +
                                 ": gluing is not an involution");
      if (std::pair(i, f) < std::pair(g->tet, pf)) t.join(i, f, g->tet, g->perm);
    }
  t.validate();
  return t;
}

std::string write_triangulation(const Triangulation& t) {
  std::ostringstream os;
  os << t.size() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.faces(i)[static_cast<std::size_t>(f)];
      if (f) os << ' ';
      if (g)
        os << g->tet << ':' << g->perm.str();
      else
        os << '-';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Edges of a tetrahedron numbered 0..5 in the order 01,02,03,12,13,23.
std::size_t edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr std::size_t table[4][4] = {{0, 0, 1, 2}, {0, 0, 3, 4}, {1, 3, 0, 5}, {2, 4, 5, 0}};
  return table[a][b];
}

}  // namespace

Skeleton compute_skeleton(const Triangulation& t) {
  const std::size_t n = t.size();
  UnionFind faces(4 * n), edges(6 * n), vertices(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.faces(i)[static_cast<std::size_t>(f)];
      if (!g) continue;
      faces.unite(4 * i + static_cast<std::size_t>(f), 4 * g->tet + static_cast<std::size_t>(g->perm[f]));
      for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        vertices.unite(4 * i + static_cast<std::size_t>(a), 4 * g->tet + static_cast<std::size_t>(g->perm[a]));
        for (int b = a + 1; b < 4; ++b) {
          if (b == f) continue;
          edges.unite(6 * i + edge_index(a, b), 6 * g->tet + edge_index(g->perm[a], g->perm[b]));
        }
      }
    }
  }
  return Skeleton{faces.classes(), edges.classes(), vertices.classes()};
}

std::size_t triangle_coord(std::size_t tet, int vertex) {
  return kStandardCoordsPerTet * tet + static_cast<std::size_t>(vertex);
}

int quad_type(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == b || a < 0 || b > 3) throw std::invalid_argument("quad_type needs two distinct vertices");
  if (a == 0) return b - 1;  // 01|23 -> 0, 02|13 -> 1, 03|12 -> 2
  return 3 - (a + b - 2);    // 23 -> 0, 13 -> 1, 12 -> 2
}

std::size_t quad_coord(std::size_t tet, int a, int b) {
  return kStandardCoordsPerTet * tet + 4 + static_cast<std::size_t>(quad_type(a, b));
}

EnumerationProblem standard_matching_equations(const Triangulation& t, bool dedup) {
  t.validate();
  EnumerationProblem p;
  p.dim = kStandardCoordsPerTet * t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    p.groups.push_back(ConstraintGroup{{7 * i + 4, 7 * i + 5, 7 * i + 6}});
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.faces(i)[static_cast<std::size_t>(f)];
      if (!g) continue;
      const int pf = g->perm[f];
      if (std::pair(g->tet, pf) < std::pair(i, f)) continue;  // emitted from the other side
      // An arc in face f cutting off corner c is parallel to the opposite edge
      // of the face; it belongs to the triangle about c and the quad separating
      // {c, f} from that edge.
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        IntVector row(p.dim);
        row[triangle_coord(i, c)] += 1;
        row[quad_coord(i, c, f)] += 1;
        row[triangle_coord(g->tet, g->perm[c])] -= 1;
        row[quad_coord(g->tet, g->perm[c], pf)] -= 1;
        p.equations.push_back(std::move(row));
      }
    }
  }
  if (dedup) {
    std::set<IntVector> seen;
    std::erase_if(p.equations, [&](const IntVector& row) { return !seen.insert(row).second; });
  }
  return p;
}

std::array<Integer, 4> face_arc_counts(std::span<const Integer> v, std::size_t tet, int face) {
  std::array<Integer, 4> arcs{};
  for (int c = 0; c < 4; ++c) {
    if (c == face) continue;
    arcs[static_cast<std::size_t>(c)] = v[triangle_coord(tet, c)] + v[quad_coord(tet, c, face)];
  }
  return arcs;
}

}  // namespace conedd
