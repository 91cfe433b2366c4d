#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "fdesc/complex.hpp"
#include "fdesc/descriptors.hpp"
#include "fdesc/fixtures.hpp"
#include "fdesc/observability.hpp"
#include "fdesc/rational.hpp"

using namespace fdesc;

namespace {

Vec v2(long x, long y) { return Vec{Rat(x), Rat(y)}; }

Ray ry(long x, long y) { return make_ray(Rat(x), Rat(y)); }

std::vector<Simplex> gens(std::initializer_list<std::vector<int>> ls) {
  std::vector<Simplex> out;
  for (const auto& l : ls) out.push_back(Simplex{l});
  return out;
}

void check_arc(const Arc& a, long sx, long sy, bool closed_start, long ex, long ey,
               bool closed_end) {
  CHECK(ray_eq(a.start, ry(sx, sy)));
  CHECK(a.closed_start == closed_start);
  CHECK(ray_eq(a.end, ry(ex, ey)));
  CHECK(a.closed_end == closed_end);
}

/* A ray strictly inside the first arc of a region (positive endpoint sum). */
Vec inside_dir(const CircularRegion& r, std::size_t arc = 0) {
  const Arc& a = r.arcs.at(arc);
  return Vec{Rat(a.start.x + a.end.x), Rat(a.start.y + a.end.y)};
}

/* Also strictly inside, but skewed: the even endpoint sum is perpendicular to
   a difference of wedge vertices, while start + 3*end never is. */
Vec inside_dir_skewed(const CircularRegion& r) {
  const Arc& a = r.arcs.at(0);
  return Vec{Rat(a.start.x + 3 * a.end.x), Rat(a.start.y + 3 * a.end.y)};
}

}  // namespace

TEST_CASE("rays compare up to positive scaling") {
  CHECK_THROWS_AS(make_ray(Rat(0), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(ray_of(Vec{Rat(1), Rat(0), Rat(0)}), std::invalid_argument);

  CHECK(ray_eq(ry(1, 2), ry(2, 4)));
  CHECK(ray_eq(make_ray(Rat(1, 2), Rat(1, 3)), ry(3, 2)));
  CHECK_FALSE(ray_eq(ry(1, 2), ry(-1, -2)));
  CHECK(ray_opposite(ry(1, 2), ry(-1, -2)));
  CHECK_FALSE(ray_opposite(ry(1, 2), ry(2, 4)));
  CHECK_FALSE(ray_eq(ry(1, 2), ry(2, 1)));
  CHECK_FALSE(ray_opposite(ry(1, 2), ry(2, 1)));

  CHECK(rat_sign(ray_cross(ry(1, 0), ry(0, 1))) > 0);
  CHECK(rat_sign(ray_cross(ry(0, 1), ry(1, 0))) < 0);
  CHECK(ray_dot(ry(1, 0), ry(0, 1)) == Rat(0));
  CHECK(ray_cross(ry(2, 3), ry(4, 6)) == Rat(0));

  CHECK(ray_eq(rotate_ccw(ry(1, 0)), ry(0, 1)));
  CHECK(ray_eq(rotate_cw(ry(1, 0)), ry(0, -1)));
  Ray r = ry(3, -7);
  CHECK(ray_eq(rotate_ccw(rotate_cw(r)), r));
  CHECK(ray_eq(rotate_ccw(rotate_ccw(r)), ray_negate(r)));

  CHECK(ray_str(ry(1, -2)) == "(1, -2)");
  CHECK(ray_str(make_ray(Rat(1, 2), Rat(-3, 4))) == "(1/2, -3/4)");
}

TEST_CASE("arcs subtend angles in (0, pi] and know their endpoints") {
  Arc quarter = make_arc(ry(1, 0), ry(0, 1), true, false);
  CHECK(quarter.closed_start);
  CHECK_FALSE(quarter.closed_end);

  // Half circles are built from opposite rays; anything wider is rejected.
  Arc half = make_arc(ry(1, 0), ry(-1, 0), false, false);
  CHECK(arc_contains(half, ry(0, 1)));
  CHECK_FALSE(arc_contains(half, ry(0, -1)));

  CHECK_THROWS_AS(make_arc(ry(0, 1), ry(1, 0), true, true), std::invalid_argument);
  CHECK_THROWS_AS(make_arc(ry(1, 0), ry(2, 0), true, true), std::invalid_argument);
  CHECK_THROWS_AS(make_arc(ry(1, 1), ry(2, -1), true, true), std::invalid_argument);

  CHECK(arc_contains(quarter, ry(1, 1)));
  CHECK(arc_contains_strictly(quarter, ry(1, 1)));
  CHECK(arc_contains(quarter, ry(5, 0)));        // closed start, scaled ray
  CHECK_FALSE(arc_contains(quarter, ry(0, 2)));  // open end
  CHECK_FALSE(arc_contains_strictly(quarter, ry(1, 0)));
  CHECK_FALSE(arc_contains(quarter, ry(1, -1)));
  CHECK_FALSE(arc_contains(quarter, ry(-1, 1)));

  CHECK(arc_contains(half, ry(-1, 1)));
  CHECK_FALSE(arc_contains(half, ry(1, 0)));   // open start
  CHECK_FALSE(arc_contains(half, ry(-1, 0)));  // open end
  CHECK(arc_contains(make_arc(ry(1, 0), ry(-1, 0), true, true), ry(-2, 0)));

  CHECK(arc_str(quarter) == "[(1, 0) -> (0, 1))");
}

TEST_CASE("arc intersection distinguishes kissing endpoints by their flags") {
  Arc a = make_arc(ry(1, 0), ry(0, 1), true, true);
  Arc b = make_arc(ry(1, 1), ry(-1, 1), true, true);
  CHECK(arcs_intersect(a, b));  // they overlap between (1,1) and (0,1)
  Arc c = make_arc(ry(-1, 0), ry(0, -1), true, true);
  CHECK_FALSE(arcs_intersect(a, c));

  // Nested arcs intersect.
  Arc inner = make_arc(ry(3, 1), ry(1, 3), true, true);
  CHECK(arcs_intersect(a, inner));

  // Arcs meeting only at a shared ray touch iff both keep that ray.
  Arc right = make_arc(ry(0, 1), ry(-1, 0), true, true);
  Arc right_open = make_arc(ry(0, 1), ry(-1, 0), false, true);
  Arc a_open_end = make_arc(ry(1, 0), ry(0, 1), true, false);
  CHECK(arcs_intersect(a, right));
  CHECK_FALSE(arcs_intersect(a, right_open));
  CHECK_FALSE(arcs_intersect(a_open_end, right));
  CHECK_FALSE(arcs_intersect(a_open_end, right_open));

  // Arcs sharing their start overlap regardless of flags.
  CHECK(arcs_intersect(make_arc(ry(1, 0), ry(0, 1), false, false),
                       make_arc(ry(1, 0), ry(1, 1), false, false)));
}

TEST_CASE("arc containment respects endpoint flags") {
  Arc outer = make_arc(ry(1, 0), ry(0, 1), true, true);
  CHECK(arc_subset(make_arc(ry(4, 1), ry(1, 4), true, true), outer));
  CHECK(arc_subset(make_arc(ry(1, 0), ry(0, 1), false, false), outer));
  CHECK(arc_subset(outer, outer));

  Arc outer_open = make_arc(ry(1, 0), ry(0, 1), false, false);
  CHECK_FALSE(arc_subset(outer, outer_open));  // closed ends stick out
  CHECK(arc_subset(outer_open, outer_open));
  CHECK(arc_subset(make_arc(ry(1, 0), ry(1, 1), false, true), outer_open));
  CHECK_FALSE(arc_subset(make_arc(ry(1, 0), ry(1, 1), true, true), outer_open));

  // Crossing the boundary is never contained.
  CHECK_FALSE(arc_subset(make_arc(ry(1, -1), ry(1, 1), true, true), outer));
  CHECK_FALSE(arc_subset(make_arc(ry(1, 1), ry(-1, 1), true, true), outer));
  // An arc that only meets the outer arc's far endpoint is not inside it.
  CHECK_FALSE(arc_subset(make_arc(ry(0, 1), ry(-1, 1), true, true), outer));
}

TEST_CASE("arc widths compare exactly across quadrant buckets") {
  Arc acute = make_arc(ry(1, 0), ry(2, 1), true, true);
  Arc acute_wider = make_arc(ry(1, 0), ry(1, 1), true, true);
  Arc right = make_arc(ry(1, 0), ry(0, 1), true, true);
  Arc obtuse = make_arc(ry(1, 0), ry(-1, 2), true, true);
  Arc obtuse_wider = make_arc(ry(1, 0), ry(-1, 1), true, true);
  Arc half = make_arc(ry(1, 0), ry(-1, 0), true, true);

  CHECK(arc_width_compare(acute, acute_wider) == -1);
  CHECK(arc_width_compare(acute_wider, acute) == 1);
  CHECK(arc_width_compare(acute_wider, right) == -1);
  CHECK(arc_width_compare(right, obtuse) == -1);
  CHECK(arc_width_compare(obtuse, obtuse_wider) == -1);
  CHECK(arc_width_compare(obtuse_wider, half) == -1);
  CHECK(arc_width_compare(half, acute) == 1);
  CHECK(arc_width_compare(half, half) == 0);
  CHECK(arc_width_compare(right, right) == 0);

  // Width is a property of rays, not of their scaling or position.
  CHECK(arc_width_compare(make_arc(ry(2, 0), ry(0, 3), true, true), right) == 0);
  CHECK(arc_width_compare(make_arc(ry(0, 1), ry(-2, 1), false, false),
                          make_arc(ry(1, 0), ry(1, 1), true, true)) == 1);
  CHECK(arc_width_compare(make_arc(ry(0, 1), ry(-2, 1), false, false),
                          make_arc(ry(1, 0), ry(1, 2), true, true)) == 0);
  // Same rotation applied to both rays preserves the width.
  CHECK(arc_width_compare(make_arc(ry(1, 1), ry(-1, 1), true, true), right) == 0);
}

TEST_CASE("regions are unions of pairwise disjoint arcs") {
  Arc a = make_arc(ry(1, 0), ry(0, 1), true, false);
  Arc b = make_arc(ry(-1, 0), ry(0, -1), true, false);
  CircularRegion r = make_region({a, b});
  CHECK(region_contains(r, ry(1, 1)));
  CHECK(region_contains(r, ry(-1, -1)));
  CHECK(region_contains(r, ry(1, 0)));
  CHECK_FALSE(region_contains(r, ry(0, 1)));
  CHECK_FALSE(region_contains(r, ry(-1, 1)));
  CHECK(region_contains_strictly(r, ry(1, 1)));
  CHECK_FALSE(region_contains_strictly(r, ry(1, 0)));

  CHECK_THROWS_AS(make_region({a, make_arc(ry(1, 1), ry(-1, 1), true, true)}),
                  std::invalid_argument);

  CircularRegion whole = make_region({make_arc(ry(1, 0), ry(-1, 0), true, false),
                                      make_arc(ry(-1, 0), ry(1, 0), true, false)});
  CHECK(region_subset(r, whole));
  CHECK_FALSE(region_subset(whole, r));
  CHECK(regions_intersect(r, whole));
  CHECK_FALSE(regions_intersect(r, make_region({make_arc(ry(-1, 2), ry(-1, 1), true, true)})));

  CHECK(region_str(r) == "{[(1, 0) -> (0, 1)) u [(-1, 0) -> (0, -1))}");
}

TEST_CASE("birth intervals are the open half-circle favoring the later vertex") {
  CircularRegion bi = birth_interval(v2(0, 0), v2(1, 0));
  // Directions under which (0,0) is strictly higher than (1,0): s_x < 0.
  CHECK(region_contains(bi, ry(-1, 5)));
  CHECK(region_contains(bi, ry(-1, 0)));
  CHECK_FALSE(region_contains(bi, ry(0, 1)));   // boundary: heights tie
  CHECK_FALSE(region_contains(bi, ry(0, -1)));
  CHECK_FALSE(region_contains(bi, ry(1, 0)));

  // Oracle: membership must match the defining sign test on every ray.
  const Vec pairs[][2] = {{v2(0, 0), v2(1, 0)},
                          {Vec{Rat(0), Rat(0)}, Vec{Rat(3, 5), Rat(4, 5)}},
                          {v2(2, -1), v2(-1, 3)}};
  for (const auto& p : pairs) {
    CircularRegion region = birth_interval(p[0], p[1]);
    REQUIRE(region.arcs.size() == 1);
    CHECK(ray_opposite(region.arcs[0].start, region.arcs[0].end));
    const Vec u = sub(p[0], p[1]);
    for (long x = -2; x <= 2; ++x) {
      for (long y = -2; y <= 2; ++y) {
        if (x == 0 && y == 0) continue;
        const bool expected = rat_sign(dot(v2(x, y), u)) > 0;
        CHECK(region_contains(region, ry(x, y)) == expected);
        CHECK(region_contains_strictly(region, ry(x, y)) == expected);
      }
    }
  }

  CHECK_THROWS_AS(birth_interval(v2(1, 1), v2(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(birth_interval(Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("the standard clothespin has the expected observability arcs") {
  ClothespinRegions regions = clothespin_regions(standard_clothespin());

  REQUIRE(regions.r1.arcs.size() == 2);
  check_arc(regions.r1.arcs[0], 4, -13, false, 8, -11, true);
  check_arc(regions.r1.arcs[1], -4, 13, true, -8, 11, false);

  REQUIRE(regions.r2.arcs.size() == 2);
  check_arc(regions.r2.arcs[0], 0, 1, false, -4, 13, true);
  check_arc(regions.r2.arcs[1], 0, -1, true, 4, -13, false);

  REQUIRE(regions.r3.arcs.size() == 2);
  check_arc(regions.r3.arcs[0], 0, -1, false, 4, -3, true);
  check_arc(regions.r3.arcs[1], 0, 1, true, -4, 3, false);

  REQUIRE(regions.w.arcs.size() == 2);
  check_arc(regions.w.arcs[0], 0, -1, true, 4, -3, true);
  check_arc(regions.w.arcs[1], 0, 1, true, -4, 3, true);

  REQUIRE(regions.r4.arcs.size() == 2);
  check_arc(regions.r4.arcs[0], 8, -11, false, 4, -3, true);
  check_arc(regions.r4.arcs[1], -8, 11, true, -4, 3, false);
}

TEST_CASE("the wedge region is the closure of the third vertex region") {
  ClothespinRegions regions = clothespin_regions(standard_clothespin());
  CHECK(region_subset(regions.r3, regions.w));

  // Boundary rays belong to the closed wedge; r3 keeps only two of them.
  for (const Ray& boundary : {ry(0, -1), ry(4, -3), ry(0, 1), ry(-4, 3)}) {
    CHECK(region_contains(regions.w, boundary));
    CHECK_FALSE(region_contains_strictly(regions.w, boundary));
  }
  CHECK_FALSE(region_contains(regions.r3, ry(0, -1)));  // open side
  CHECK(region_contains(regions.r3, ry(4, -3)));        // closed side
  CHECK(region_contains(regions.r3, ry(0, 1)));         // closed side
  CHECK_FALSE(region_contains(regions.r3, ry(-4, 3)));  // open side

  // Membership is invariant under positive rescaling of the query.
  for (const Vec& dir : {v2(1, -2), v2(1, 1), v2(-1, 3), v2(-2, -1)}) {
    Vec scaled = scale(rat_of(7, 3), dir);
    CHECK(region_contains(regions.w, ray_of(dir)) ==
          region_contains(regions.w, ray_of(scaled)));
  }
}

TEST_CASE("every other vertex region sits inside the wedge") {
  for (const SimplicialComplex& pin :
       {standard_clothespin(), build_clothespin(v2(-2, -1), v2(2, 0), v2(0, 0), v2(1, 2))}) {
    ClothespinRegions regions = clothespin_regions(pin);
    CHECK(region_subset(regions.r1, regions.w));
    CHECK(region_subset(regions.r2, regions.w));
    CHECK(region_subset(regions.r4, regions.w));
    CHECK(region_subset(regions.r3, regions.w));
    CHECK_FALSE(region_subset(regions.w, regions.r3));
  }
}

TEST_CASE("wedges narrow as the fourth vertex leans toward the second") {
  ClothespinRegions wide = clothespin_regions(standard_clothespin());
  // Same pin except v4 = (4/5, 3/5), closer to the ray from v3 through v2.
  ClothespinRegions narrow = clothespin_regions(build_clothespin(
      Vec{rat_of(-8, 5), rat_of(-4, 5)}, v2(1, 0), v2(0, 0), Vec{rat_of(4, 5), rat_of(3, 5)}));
  CHECK(arc_width_compare(narrow.w.arcs[0], wide.w.arcs[0]) == -1);
  CHECK(arc_width_compare(wide.w.arcs[0], narrow.w.arcs[0]) == 1);
  // The two arcs of one wedge have equal width, as do closure and interior.
  CHECK(arc_width_compare(wide.w.arcs[0], wide.w.arcs[1]) == 0);
  CHECK(arc_width_compare(wide.r3.arcs[0], wide.w.arcs[0]) == 0);
  // The first vertex region is narrower than the wedge on this pin.
  CHECK(arc_width_compare(wide.r1.arcs[0], wide.w.arcs[0]) == -1);
}

TEST_CASE("malformed clothespins are rejected") {
  CHECK_THROWS_AS(clothespin_regions(fan_graph()), std::invalid_argument);
  CHECK_THROWS_AS(clothespin_regions(square_a()), std::invalid_argument);
  CHECK_THROWS_AS(clothespin_regions(single_edge()), std::invalid_argument);

  // Right vertex count, wrong edge pairing.
  SimplicialComplex crossed =
      make_complex(2, {v2(-2, -1), v2(2, 0), v2(0, 0), v2(1, 2)}, gens({{0, 2}, {1, 3}}));
  CHECK_THROWS_AS(clothespin_regions(crossed), std::invalid_argument);

  // Interior vertex on the triangle boundary or outside it.
  SimplicialComplex on_edge =
      make_complex(2, {v2(-2, 0), v2(2, 0), v2(0, 0), v2(0, 2)}, gens({{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(clothespin_regions(on_edge), std::invalid_argument);
  SimplicialComplex outside =
      make_complex(2, {v2(-2, -1), v2(2, 0), v2(5, 5), v2(1, 2)}, gens({{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(clothespin_regions(outside), std::invalid_argument);

  // Degenerate triangle: the three outer vertices are collinear.
  SimplicialComplex flat =
      make_complex(2, {v2(-2, 0), v2(2, 0), v2(0, 1), v2(4, 0)}, gens({{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(clothespin_regions(flat), std::invalid_argument);

  // The constructor fixture enforces the same geometry up front.
  CHECK_THROWS_AS(build_clothespin(v2(-2, -1), v2(2, 0), v2(5, 5), v2(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_clothespin(v2(-2, 0), v2(2, 0), v2(0, 1), v2(4, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_clothespin(Vec{Rat(0), Rat(0), Rat(0)}, v2(2, 0), v2(0, 0), v2(1, 2)),
      std::invalid_argument);
}

TEST_CASE("a direction detects the swapped pin exactly inside the wedge") {
  SimplicialComplex pin = standard_clothespin();
  SimplicialComplex swapped =
      make_complex(2, pin.vertices, gens({{0, 3}, {1, 2}}));
  ClothespinRegions regions = clothespin_regions(pin);

  // All samples avoid directions perpendicular to a vertex difference, so
  // every vertex height is distinct and the detectability claim applies.
  const std::vector<Vec> inside{v2(1, -1), v2(1, -3), v2(2, -3), v2(3, -7),
                                v2(-1, 1), v2(-1, 3), v2(-2, 3), v2(-3, 7)};
  const std::vector<Vec> outside{v2(1, 0),  v2(1, 2),   v2(1, 1),  v2(2, -1),
                                 v2(-1, 0), v2(-1, -1), v2(-3, 1)};
  for (const Vec& s : inside) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        REQUIRE(dot(s, sub(pin.vertices[i], pin.vertices[j])) != Rat(0));
      }
    }
  }
  for (const Vec& s : inside) {
    CHECK(region_contains_strictly(regions.w, ray_of(s)));
    CHECK_FALSE(equal(compute(pin, DescriptorKind::APD, s),
                      compute(swapped, DescriptorKind::APD, s)));
  }
  for (const Vec& s : outside) {
    CHECK_FALSE(region_contains(regions.w, ray_of(s)));
    CHECK(equal(compute(pin, DescriptorKind::APD, s),
                compute(swapped, DescriptorKind::APD, s)));
  }
}

TEST_CASE("clotheslines carry one certified-disjoint wedge per clothespin") {
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    SimplicialComplex line = build_clothesline(m);
    CHECK(line.vertex_count() == 4 * m);
    CHECK(clothesline_wedges(line).size() == static_cast<std::size_t>(m));
    CHECK(regions_disjoint(line));
  }
  CHECK_THROWS_AS(build_clothesline(0), std::invalid_argument);

  // Two copies of the same pin have identical wedges: not disjoint.
  SimplicialComplex pin = standard_clothespin();
  std::vector<Vec> pts = pin.vertices;
  for (const Vec& p : pin.vertices) pts.push_back(add(p, v2(100, 0)));
  SimplicialComplex twins =
      make_complex(2, pts, gens({{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  CHECK_FALSE(regions_disjoint(twins));

  CHECK_THROWS_AS(regions_disjoint(single_edge()), std::invalid_argument);
  CHECK_THROWS_AS(regions_disjoint(square_a()), std::invalid_argument);
}

TEST_CASE("hitting the wedges needs one direction per clothespin") {
  SimplicialComplex line = build_clothesline(4);
  std::vector<CircularRegion> wedges = clothesline_wedges(line);
  REQUIRE(wedges.size() == 4);

  std::vector<Vec> all;
  for (const CircularRegion& w : wedges) all.push_back(inside_dir(w));
  HittingReport full = hitting_lower_bound(line, all);
  CHECK(full.satisfied);
  CHECK(full.uncovered.empty());

  std::vector<Vec> missing_two{all[0], all[1], all[3]};
  HittingReport partial = hitting_lower_bound(line, missing_two);
  CHECK_FALSE(partial.satisfied);
  CHECK(partial.uncovered == std::vector<int>{2});

  std::vector<Vec> crowded{all[0], all[0], all[0], all[0]};
  HittingReport one_wedge = hitting_lower_bound(line, crowded);
  CHECK_FALSE(one_wedge.satisfied);
  CHECK(one_wedge.uncovered == std::vector<int>{1, 2, 3});

  HittingReport nothing = hitting_lower_bound(line, {});
  CHECK(nothing.uncovered == std::vector<int>{0, 1, 2, 3});

  // Wedges are closed: a boundary ray counts as a hit.
  std::vector<Vec> boundary_hit = all;
  boundary_hit[1] = Vec{Rat(wedges[1].arcs[0].start.x), Rat(wedges[1].arcs[0].start.y)};
  CHECK(hitting_lower_bound(line, boundary_hit).satisfied);
}

TEST_CASE("swapping a motif's edges changes the clothesline but not its vertices") {
  SimplicialComplex line = build_clothesline(3);
  SimplicialComplex swapped = clothesline_edge_swap(line, 1);
  CHECK(swapped.vertices == line.vertices);
  CHECK_FALSE(complexes_equal(swapped, line));
  CHECK(swapped.has(Simplex{{4, 7}}));
  CHECK(swapped.has(Simplex{{5, 6}}));
  CHECK_FALSE(swapped.has(Simplex{{4, 5}}));
  CHECK(swapped.has(Simplex{{0, 1}}));
  CHECK_THROWS_AS(clothesline_edge_swap(line, 3), std::invalid_argument);
  CHECK_THROWS_AS(clothesline_edge_swap(line, -1), std::invalid_argument);

  // A swap inside one wedge is invisible from inside another pin's wedge.
  SimplicialComplex two = build_clothesline(2);
  std::vector<CircularRegion> wedges = clothesline_wedges(two);
  SimplicialComplex swap0 = clothesline_edge_swap(two, 0);
  const Vec in0 = inside_dir_skewed(wedges[0]);
  const Vec in1 = inside_dir_skewed(wedges[1]);
  CHECK(region_contains_strictly(wedges[0], ray_of(in0)));
  CHECK(region_contains_strictly(wedges[1], ray_of(in1)));
  CHECK_FALSE(equal(compute(two, DescriptorKind::APD, in0),
                    compute(swap0, DescriptorKind::APD, in0)));
  CHECK(equal(compute(two, DescriptorKind::APD, in1),
              compute(swap0, DescriptorKind::APD, in1)));
}
