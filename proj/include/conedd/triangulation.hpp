#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conedd/cone_problem.hpp"

namespace conedd {

/// A permutation of the tetrahedron vertices {0,1,2,3}, stored as images.
class Perm4 {
 public:
  constexpr Perm4() : images_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : images_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  /// Parses a 4-character image string such as "1023". Throws on anything
  /// that is not a permutation of 0123.
  static Perm4 parse(std::string_view images);

  constexpr int operator[](int v) const { return images_[static_cast<std::size_t>(v)]; }
  Perm4 inverse() const;
  std::string str() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

struct Gluing {
  std::size_t tet;
  Perm4 perm;  // vertex v of this tetrahedron maps to vertex perm[v] of `tet`

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tetrahedra with face gluings. Face j of a tetrahedron is the face opposite
/// vertex j; an unset face is boundary.
class Triangulation {
 public:
  using Faces = std::array<std::optional<Gluing>, 4>;

  Triangulation() = default;
  explicit Triangulation(std::size_t n) : tets_(n) {}

  std::size_t size() const { return tets_.size(); }
  const Faces& faces(std::size_t tet) const { return tets_.at(tet); }

  /// Glues face `face` of `tet` to the partner tetrahedron, setting both sides.
  void join(std::size_t tet, int face, std::size_t target, Perm4 perm);

  /// Throws TriangulationError on out-of-range targets, self-glued faces, or a
  /// gluing whose partner does not map back through the inverse permutation.
  void validate() const;

  std::size_t boundary_faces() const;

 private:
  std::vector<Faces> tets_;
};

struct Skeleton {
  std::size_t faces = 0;
  std::size_t edges = 0;
  std::size_t vertices = 0;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

Triangulation parse_triangulation(std::string_view text);
std::string write_triangulation(const Triangulation& t);

Skeleton compute_skeleton(const Triangulation& t);

/// Standard coordinate layout: tetrahedron i owns 7i..7i+6; offsets 0..3 are
/// the triangles about vertices 0..3, offsets 4,5,6 the quadrilaterals
/// separating 01|23, 02|13, 03|12.
constexpr std::size_t kStandardCoordsPerTet = 7;
std::size_t triangle_coord(std::size_t tet, int vertex);
std::size_t quad_coord(std::size_t tet, int a, int b);
/// Quadrilateral type (0, 1 or 2) separating vertices {a,b} from the others.
int quad_type(int a, int b);

/// One matching equation per (internal face, edge of that face), generated
/// from the lower-numbered side of each gluing. Rows that cancel to zero are
/// kept, so a closed triangulation yields exactly 6n rows.
EnumerationProblem standard_matching_equations(const Triangulation& t, bool dedup = false);

/// Counts the normal arcs of a standard-coordinate vector on face `face` of
/// `tet`, indexed by the vertex of the face each arc cuts off.
std::array<Integer, 4> face_arc_counts(std::span<const Integer> v, std::size_t tet, int face);

}  // namespace conedd
