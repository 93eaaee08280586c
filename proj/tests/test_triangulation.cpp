#include <doctest.h>

#include <random>

#include "conedd/dd_engine.hpp"
#include "conedd/triangulation.hpp"
#include "test_support.hpp"

using namespace conedd;
using conedd::testing::load_triangulation;

namespace {

bool arcs_balance(const Triangulation& t, std::span<const Integer> v) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.faces(i)[static_cast<std::size_t>(f)];
      if (!g) continue;
      const auto mine = face_arc_counts(v, i, f);
      const auto theirs = face_arc_counts(v, g->tet, g->perm[f]);
      for (int c = 0; c < 4; ++c)
        if (c != f && mine[static_cast<std::size_t>(c)] != theirs[static_cast<std::size_t>(g->perm[c])]) return false;
    }
  return true;
}

bool satisfies(const EnumerationProblem& p, std::span<const Integer> v) {
  for (const auto& row : p.equations)
    if (dot(row, v) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Perm4") {
  const auto p = Perm4::parse("1023");
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p.inverse() == p);
  CHECK(Perm4::parse("1230").inverse().str() == "3012");
  CHECK_THROWS(Perm4::parse("1123"));
  CHECK_THROWS(Perm4::parse("012"));
}

TEST_CASE("parse a one-tetrahedron file with two face pairs glued") {
  const auto t = load_triangulation("one_tet.tri");
  CHECK(t.size() == 1);
  CHECK(t.boundary_faces() == 0);
  CHECK(t.faces(0)[0]->tet == 0);
  CHECK(t.faces(0)[0]->perm == Perm4(1, 0, 2, 3));
  CHECK(compute_skeleton(t).faces == 2);
  CHECK(parse_triangulation(write_triangulation(t)).faces(0) == t.faces(0));
}

TEST_CASE("parse errors") {
  // face 0 of tet 0 claims tet 1 face 1, but tet 1 face 1 maps back differently
  CHECK_THROWS_AS(parse_triangulation("2\n1:1023 - - -\n- 0:0123 - -\n"), TriangulationError);
  CHECK_THROWS_AS(parse_triangulation("1\n2:0123 - - -\n"), ParseError);
  CHECK_THROWS_AS(parse_triangulation("1\n- - -\n"), ParseError);
  CHECK_THROWS_AS(parse_triangulation("1\n0:0123 - - -\n"), TriangulationError);  // face onto itself
  CHECK_THROWS_AS(parse_triangulation("x\n"), ParseError);
  CHECK_NOTHROW(parse_triangulation("# nothing glued\n1\n- - - -\n"));
}

TEST_CASE("skeleton") {
  CHECK(compute_skeleton(Triangulation(1)) == Skeleton{4, 6, 4});

  const auto s2s1 = load_triangulation("s2xs1.tri");
  CHECK(s2s1.size() == 2);
  const auto sk = compute_skeleton(s2s1);
  CHECK(sk.vertices == 1);
  CHECK(sk.edges == 3);
  CHECK(sk.faces == 4);

  for (const char* name : {"one_tet.tri", "twisted_loop_9.tri", "twisted_loop_12.tri"}) {
    const auto t = load_triangulation(name);
    CHECK(compute_skeleton(t).faces == 2 * t.size());
  }
  // twisted layered loops have one vertex and n+1 edges
  const auto loop = load_triangulation("twisted_loop_9.tri");
  CHECK(compute_skeleton(loop) == Skeleton{18, 10, 1});

  Triangulation half(2);
  half.join(0, 3, 1, Perm4());
  CHECK(compute_skeleton(half).faces == (8 - 6) / 2 + 6);
}

TEST_CASE("coordinate layout") {
  CHECK(triangle_coord(2, 3) == 17);
  CHECK(quad_type(0, 1) == 0);
  CHECK(quad_type(2, 3) == 0);
  CHECK(quad_type(0, 2) == 1);
  CHECK(quad_type(3, 1) == 1);
  CHECK(quad_type(0, 3) == 2);
  CHECK(quad_type(1, 2) == 2);
  CHECK(quad_coord(1, 2, 1) == 7 + 6);
}

TEST_CASE("matching equation for two triangles against a triangle and a quadrilateral") {
  // Face 3 of both tetrahedra glued identically. In the first, one triangle
  // about vertex 2 and one quadrilateral 01|23; in the second, two triangles
  // about vertex 2. Each crosses the face in arcs about vertex 2.
  Triangulation t(2);
  t.join(0, 3, 1, Perm4());
  const auto p = standard_matching_equations(t);
  CHECK(p.num_equations() == 3);

  IntVector v(14);
  v[2] = 1;
  v[4] = 1;
  v[7 + 2] = 2;
  CHECK(satisfies(p, v));
  CHECK(face_arc_counts(v, 0, 3)[2] == 2);
  CHECK(face_arc_counts(v, 1, 3)[2] == 2);

  // the row for edge 01 reads t_{0,2} + q_{0,01|23} - t_{1,2} - q_{1,01|23}
  bool found = false;
  for (const auto& row : p.equations)
    if (row == make_vector({0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, -1, 0, 0})) found = true;
  CHECK(found);

  v[7 + 2] = 1;
  CHECK_FALSE(satisfies(p, v));
}

TEST_CASE("closed triangulations give 6n equations of at most four non-zeros") {
  for (const char* name : {"one_tet.tri", "s2xs1.tri", "twisted_loop_9.tri", "twisted_loop_12.tri"}) {
    const auto t = load_triangulation(name);
    const auto p = standard_matching_equations(t);
    CHECK(p.dim == 7 * t.size());
    CHECK(p.num_equations() == 6 * t.size());
    CHECK(p.groups.size() == t.size());
    CHECK_NOTHROW(p.validate());
    for (const auto& row : p.equations) {
      int nonzero = 0;
      for (const auto& x : row) {
        nonzero += x != 0;
        CHECK(abs(x) <= 2);
      }
      CHECK(nonzero <= 4);
    }
    CHECK(standard_matching_equations(t, true).num_equations() <= p.num_equations());
  }
}

TEST_CASE("row support lies in the two tetrahedra of its face") {
  const auto t = load_triangulation("twisted_loop_9.tri");
  const auto p = standard_matching_equations(t);
  std::size_t r = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.faces(i)[static_cast<std::size_t>(f)];
      if (g->tet < i || (g->tet == i && g->perm[f] < f)) continue;
      for (int e = 0; e < 3; ++e, ++r)
        for (std::size_t k = 0; k < p.dim; ++k)
          if (p.equations[r][k] != 0) CHECK((k / 7 == i || k / 7 == g->tet));
    }
  CHECK(r == p.num_equations());
}

TEST_CASE("boundary faces produce no equations") {
  CHECK(standard_matching_equations(Triangulation(1)).num_equations() == 0);
  Triangulation t(2);
  t.join(0, 0, 1, Perm4(1, 0, 2, 3));
  CHECK(standard_matching_equations(t).num_equations() == 3);
}

TEST_CASE("equations hold exactly when arc counts balance") {
  std::mt19937_64 rng(11);
  for (const char* name : {"one_tet.tri", "s2xs1.tri"}) {
    const auto t = load_triangulation(name);
    auto p = standard_matching_equations(t);
    p.groups.clear();
    const auto rays = run(p).rays;
    REQUIRE_FALSE(rays.empty());
    for (int trial = 0; trial < 200; ++trial) {
      IntVector v(p.dim);
      if (trial % 2 == 0) {
        for (const auto& r : rays) {
          const long c = static_cast<long>(rng() % 3);
          for (std::size_t k = 0; k < p.dim; ++k) v[k] += c * r[k];
        }
      } else {
        for (auto& x : v) x = static_cast<long>(rng() % 3);
      }
      CHECK(satisfies(p, v) == arcs_balance(t, v));
    }
  }
}
