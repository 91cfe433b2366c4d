#pragma once

// Circular regions of directions on S^1, represented exactly: every arc is
// bounded by rational rays and membership is decided by sign tests on cross
// and dot products, never by floating-point angles.

#include <string>
#include <vector>

#include "fdesc/complex.hpp"
#include "fdesc/rational.hpp"

namespace fdesc {

// A ray from the origin through a nonzero rational 2-vector.  Two rays are
// equal iff the vectors are positive multiples of each other.
struct Ray {
  Rat x;
  Rat y;
};

Ray make_ray(const Rat& x, const Rat& y);
Ray ray_of(const Vec& v);
bool ray_eq(const Ray& a, const Ray& b);
bool ray_opposite(const Ray& a, const Ray& b);
std::string ray_str(const Ray& r);

// cross(a, b) > 0 iff b lies counterclockwise of a (within a half turn).
Rat ray_cross(const Ray& a, const Ray& b);
Rat ray_dot(const Ray& a, const Ray& b);

// Rotations by a quarter turn keep rational coordinates rational.
Ray rotate_ccw(const Ray& r);  // (x, y) -> (-y, x)
Ray rotate_cw(const Ray& r);   // (x, y) -> (y, -x)
Ray ray_negate(const Ray& r);

// Closed or open arc on S^1 traversed counterclockwise from `start` to
// `end`.  Width is constrained to lie in (0, pi]: either cross(start,end) > 0
// (strictly less than a half turn) or start and end are opposite rays (an
// exact half-circle).  Full circles and empty arcs are not representable.
struct Arc {
  Ray start;
  Ray end;
  bool closed_start = true;
  bool closed_end = true;
};

// Throws std::invalid_argument unless the (start, end) pair satisfies the
// width constraint above.
Arc make_arc(const Ray& start, const Ray& end, bool closed_start, bool closed_end);

bool arc_contains(const Arc& a, const Ray& q);
// Strict interior: membership ignoring both endpoint flags.
bool arc_contains_strictly(const Arc& a, const Ray& q);
bool arcs_intersect(const Arc& a, const Arc& b);
bool arc_subset(const Arc& inner, const Arc& outer);
std::string arc_str(const Arc& a);

// Exact comparison of arc widths (angle subtended), no trigonometry: decides
// via cross/dot sign tests on the boundary rays.  Returns -1, 0, or +1.
int arc_width_compare(const Arc& a, const Arc& b);

// Finite union of pairwise disjoint arcs.
struct CircularRegion {
  std::vector<Arc> arcs;
};

CircularRegion make_region(std::vector<Arc> arcs);

bool region_contains(const CircularRegion& r, const Ray& q);
bool region_contains_strictly(const CircularRegion& r, const Ray& q);
bool regions_intersect(const CircularRegion& a, const CircularRegion& b);
bool region_subset(const CircularRegion& inner, const CircularRegion& outer);
std::string region_str(const CircularRegion& r);

// Directions s under which vertex v1 appears strictly later than v2 in the
// lower-star filtration, i.e. {s : s.v1 > s.v2}: an open half-circle whose
// boundary rays are the two perpendiculars of v2 - v1.
// Throws std::invalid_argument when v1 == v2 or the points are not planar.
CircularRegion birth_interval(const Vec& v1, const Vec& v2);

struct ClothespinRegions {
  CircularRegion r1;
  CircularRegion r2;
  CircularRegion r3;
  CircularRegion r4;
  CircularRegion w;  // closure of r3
};

// Regions of directions under which each vertex of a clothespin complex is
// detectable from the verbose diagram.  K must come from build_clothespin
// (two edges {v1,v2}, {v3,v4} with v3 strictly inside triangle v1 v2 v4).
// Throws std::invalid_argument otherwise.
ClothespinRegions clothespin_regions(const SimplicialComplex& k);

// True iff the W-regions of the m clothespins of a clothesline complex are
// pairwise disjoint.  Throws std::invalid_argument on malformed input.
bool regions_disjoint(const SimplicialComplex& clothesline);

struct HittingReport {
  bool satisfied = false;
  // Indices i (0-based clothespin index) whose W_i contains no direction of S.
  std::vector<int> uncovered;
};

// Checks that S hits the W-region of every clothespin of the clothesline.
// Since the regions are pairwise disjoint, satisfied implies |S| >= m.
HittingReport hitting_lower_bound(const SimplicialComplex& clothesline,
                                  const std::vector<Vec>& directions);

// W-regions of the individual clothespins, in motif order.
std::vector<CircularRegion> clothesline_wedges(const SimplicialComplex& clothesline);

}  // namespace fdesc
