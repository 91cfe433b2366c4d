#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdesc/rational.hpp"

namespace fdesc {

/* Abstract simplex: sorted list of distinct vertex indices, never empty. */
struct Simplex {
  std::vector<int> v;

  int dim() const { return int(v.size()) - 1; }
  bool operator==(const Simplex&) const = default;
  auto operator<=>(const Simplex&) const = default;
};

/* Canonical listing order: dimension first, then lexicographic. */
bool simplex_order(const Simplex& a, const Simplex& b);

/* All (dim-1)-faces; empty for vertices. */
std::vector<Simplex> facets(const Simplex& s);

/* All nonempty proper faces. */
std::vector<Simplex> proper_faces(const Simplex& s);

bool is_face_of(const Simplex& a, const Simplex& b);

std::string simplex_str(const Simplex& s);

/* Finite simplicial complex immersed in R^d. vertices[i] is the coordinate
 * of vertex i; every index 0..n0-1 appears as the 0-simplex {i}; the simplex
 * list is closed under faces, duplicate-free, and sorted by (dim, lex).
 * make_complex establishes all of this; validate re-checks it on arbitrary
 * instances. */
struct SimplicialComplex {
  int ambient_dim = 0;
  std::vector<Vec> vertices;
  std::vector<Simplex> simplices;

  std::size_t vertex_count() const { return vertices.size(); }
  int top_dim() const;
  std::vector<long> simplex_counts_by_dim() const;
  long euler_characteristic() const;
  int index_of(const Simplex& s) const;  // -1 when absent
  bool has(const Simplex& s) const { return index_of(s) >= 0; }
};

/* Build a complex from generators: face closure is computed, vertex
 * singletons are always included, the list is sorted and deduplicated.
 * Throws std::invalid_argument on out-of-range indices or coordinate
 * dimension mismatches. */
SimplicialComplex make_complex(int ambient_dim, std::vector<Vec> points,
                               const std::vector<Simplex>& generators);

enum class ViolationKind {
  WrongPointDimension,
  BadVertexIndex,
  MalformedSimplex,    // unsorted / repeated vertices / empty
  DuplicateSimplex,
  MissingFace,
  SimplexExceedsAmbient,      // more than d+1 vertices cannot be embedded
  AffinelyDependentVertices,  // general-position failure, minimal subset
};

struct Violation {
  ViolationKind kind;
  std::vector<int> subject;  // vertex indices or simplex vertex list
  std::string detail;
};

/* Structural + general-position report. Empty report == the complex
 * satisfies every representation invariant and every vertex subset of size
 * <= d+1 is affinely independent (minimal dependent subsets are reported). */
std::vector<Violation> validate(const SimplicialComplex& k);
bool general_position_ok(const SimplicialComplex& k);

/* Equality of immersed complexes: same ambient dimension, same vertex
 * point set, same simplices over those points (vertex indexing is an
 * artifact; comparison relabels by lexicographic coordinate order). */
SimplicialComplex canonical_form(const SimplicialComplex& k);
bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b);

/* Exact membership of x in the union of the (closed) simplices of k. */
bool point_membership(const SimplicialComplex& k, const Vec& x);

/* Split edge e at its midpoint: e is replaced by two edges through the new
 * vertex and every triangle containing e by two triangles. Requires e to be
 * an edge of k contained in no simplex of dimension > 2. Note the output
 * deliberately breaks general position (midpoint is collinear with the old
 * endpoints). */
SimplicialComplex barycentric_subdivide_edge(const SimplicialComplex& k, const Simplex& e);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 20;

/* Every face-closed complex on exactly the given vertex set with simplex
 * dimension <= max_dim, in a deterministic order. Throws std::length_error
 * when the search space (2^#candidate-simplices) exceeds the budget, and
 * std::invalid_argument when two points coincide (affinely dependent but
 * distinct placements are allowed; validate() reports them as findings). */
std::vector<SimplicialComplex> enumerate_subcomplexes(
    int ambient_dim, const std::vector<Vec>& points, int max_dim,
    std::uint64_t budget = kDefaultEnumerationBudget);

/* Every complex over every nonempty vertex subset of the point pool (points
 * pairwise distinct), with simplex dimension <= max_dim. Used to build
 * adversary pools over coordinate grids. */
std::vector<SimplicialComplex> enumerate_on_point_subsets(
    int ambient_dim, const std::vector<Vec>& pool, int max_dim,
    std::size_t max_vertices, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fdesc
