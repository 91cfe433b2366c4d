#include "fdesc/observability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fdesc/linalg.hpp"

namespace fdesc {

Ray make_ray(const Rat& x, const Rat& y) {
  if (rat_sign(x) == 0 && rat_sign(y) == 0) {
    throw std::invalid_argument("ray vector must be nonzero");
  }
  return Ray{x, y};
}

Ray ray_of(const Vec& v) {
  if (v.size() != 2) throw std::invalid_argument("rays live in the plane");
  return make_ray(v[0], v[1]);
}

Rat ray_cross(const Ray& a, const Ray& b) {
  Rat c = a.x * b.y - a.y * b.x;
  return c;
}

Rat ray_dot(const Ray& a, const Ray& b) {
  Rat d = a.x * b.x + a.y * b.y;
  return d;
}

bool ray_eq(const Ray& a, const Ray& b) {
  return rat_sign(ray_cross(a, b)) == 0 && rat_sign(ray_dot(a, b)) > 0;
}

bool ray_opposite(const Ray& a, const Ray& b) {
  return rat_sign(ray_cross(a, b)) == 0 && rat_sign(ray_dot(a, b)) < 0;
}

std::string ray_str(const Ray& r) {
  return "(" + rat_str(r.x) + ", " + rat_str(r.y) + ")";
}

Ray rotate_ccw(const Ray& r) {
  Rat nx = -r.y;
  return Ray{nx, r.x};
}

Ray rotate_cw(const Ray& r) {
  Rat ny = -r.x;
  return Ray{r.y, ny};
}

Ray ray_negate(const Ray& r) {
  Rat nx = -r.x;
  Rat ny = -r.y;
  return Ray{nx, ny};
}

Arc make_arc(const Ray& start, const Ray& end, bool closed_start, bool closed_end) {
  const int cr = rat_sign(ray_cross(start, end));
  const int dt = rat_sign(ray_dot(start, end));
  if (!(cr > 0 || (cr == 0 && dt < 0))) {
    throw std::invalid_argument("arc must subtend an angle in (0, pi]");
  }
  return Arc{start, end, closed_start, closed_end};
}

bool arc_contains_strictly(const Arc& a, const Ray& q) {
  const int cr = rat_sign(ray_cross(a.start, a.end));
  if (cr == 0) {
    // Exact half-circle: strictly inside iff counterclockwise of start.
    return rat_sign(ray_cross(a.start, q)) > 0;
  }
  return rat_sign(ray_cross(a.start, q)) > 0 && rat_sign(ray_cross(q, a.end)) > 0;
}

bool arc_contains(const Arc& a, const Ray& q) {
  if (ray_eq(q, a.start)) return a.closed_start;
  if (ray_eq(q, a.end)) return a.closed_end;
  return arc_contains_strictly(a, q);
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  // Arcs that set out counterclockwise from the same ray, or sweep into the
  // same ray, overlap just inside that ray no matter the endpoint flags.
  if (ray_eq(a.start, b.start) || ray_eq(a.end, b.end)) return true;
  // Kissing endpoints meet only when both sides keep the shared ray.
  if (ray_eq(a.start, b.end) && a.closed_start && b.closed_end) return true;
  if (ray_eq(a.end, b.start) && a.closed_end && b.closed_start) return true;
  // Otherwise any overlap puts some endpoint strictly inside the other arc
  // (both widths are at most pi, so arcs cannot wrap around each other).
  if (arc_contains_strictly(b, a.start) || arc_contains_strictly(b, a.end)) return true;
  if (arc_contains_strictly(a, b.start) || arc_contains_strictly(a, b.end)) return true;
  return false;
}

bool arc_subset(const Arc& inner, const Arc& outer) {
  // Inner points just past these shared rays would fall outside outer.
  if (ray_eq(inner.start, outer.end) || ray_eq(inner.end, outer.start)) return false;
  if (inner.closed_start) {
    if (!arc_contains(outer, inner.start)) return false;
  } else {
    if (!arc_contains(outer, inner.start) && !ray_eq(inner.start, outer.start)) return false;
  }
  if (inner.closed_end) {
    if (!arc_contains(outer, inner.end)) return false;
  } else {
    if (!arc_contains(outer, inner.end) && !ray_eq(inner.end, outer.end)) return false;
  }
  // With both endpoints pinned inside and widths at most pi, the inner arc
  // cannot leave and re-enter the outer arc.
  return true;
}

std::string arc_str(const Arc& a) {
  std::ostringstream os;
  os << (a.closed_start ? "[" : "(") << ray_str(a.start) << " -> " << ray_str(a.end)
     << (a.closed_end ? "]" : ")");
  return os.str();
}

int arc_width_compare(const Arc& a, const Arc& b) {
  // Widths lie in (0, pi]; classify by quadrant of (cos, sin) ~ (dot, cross)
  // of the boundary rays, then compare tangents within a quadrant.  All
  // exact: no angles are ever evaluated.
  const Rat ca = ray_dot(a.start, a.end);
  const Rat ra = ray_cross(a.start, a.end);
  const Rat cb = ray_dot(b.start, b.end);
  const Rat rb = ray_cross(b.start, b.end);
  auto bucket = [](const Rat& c, const Rat& r) {
    if (rat_sign(r) == 0) return 3;                    // exactly pi
    if (rat_sign(c) > 0) return 0;                     // (0, pi/2)
    if (rat_sign(c) == 0) return 1;                    // exactly pi/2
    return 2;                                          // (pi/2, pi)
  };
  const int qa = bucket(ca, ra);
  const int qb = bucket(cb, rb);
  if (qa != qb) return qa < qb ? -1 : 1;
  if (qa == 1 || qa == 3) return 0;
  if (qa == 0) {
    // theta = atan(r/c), c > 0: compare r_a/c_a vs r_b/c_b.
    Rat lhs = ra * cb;
    Rat rhs = rb * ca;
    if (lhs == rhs) return 0;
    return lhs < rhs ? -1 : 1;
  }
  // theta = pi - atan(r/|c|), c < 0: larger tangent means smaller angle.
  Rat lhs = ra * (-cb);
  Rat rhs = rb * (-ca);
  if (lhs == rhs) return 0;
  return lhs > rhs ? -1 : 1;
}

CircularRegion make_region(std::vector<Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs_intersect(arcs[i], arcs[j])) {
        throw std::invalid_argument("region arcs must be pairwise disjoint");
      }
    }
  }
  return CircularRegion{std::move(arcs)};
}

bool region_contains(const CircularRegion& r, const Ray& q) {
  for (const Arc& a : r.arcs) {
    if (arc_contains(a, q)) return true;
  }
  return false;
}

bool region_contains_strictly(const CircularRegion& r, const Ray& q) {
  for (const Arc& a : r.arcs) {
    if (arc_contains_strictly(a, q)) return true;
  }
  return false;
}

bool regions_intersect(const CircularRegion& a, const CircularRegion& b) {
  for (const Arc& x : a.arcs) {
    for (const Arc& y : b.arcs) {
      if (arcs_intersect(x, y)) return true;
    }
  }
  return false;
}

bool region_subset(const CircularRegion& inner, const CircularRegion& outer) {
  // Outer arcs are pairwise disjoint, so an inner arc must sit inside one
  // outer arc entirely.
  for (const Arc& x : inner.arcs) {
    bool covered = false;
    for (const Arc& y : outer.arcs) {
      if (arc_subset(x, y)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::string region_str(const CircularRegion& r) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    if (i) os << " u ";
    os << arc_str(r.arcs[i]);
  }
  os << "}";
  return os.str();
}

CircularRegion birth_interval(const Vec& v1, const Vec& v2) {
  if (v1.size() != 2 || v2.size() != 2) {
    throw std::invalid_argument("birth intervals are defined for planar points");
  }
  if (v1 == v2) throw std::invalid_argument("birth interval requires distinct points");
  // {s : s.v1 > s.v2} = open half-circle of directions making a positive
  // dot product with u = v1 - v2; its boundary rays are the perpendiculars
  // of v2 - v1.
  const Ray u = ray_of(sub(v1, v2));
  return make_region({make_arc(rotate_cw(u), rotate_ccw(u), false, false)});
}

namespace {

// Arc between two non-parallel rays taking the short way around, oriented
// counterclockwise; each openness flag stays attached to its ray.
Arc short_arc(const Ray& p, bool closed_p, const Ray& q, bool closed_q) {
  const int cr = rat_sign(ray_cross(p, q));
  if (cr == 0) throw std::invalid_argument("short arc requires non-parallel rays");
  if (cr > 0) return make_arc(p, q, closed_p, closed_q);
  return make_arc(q, p, closed_q, closed_p);
}

struct ClothespinShape {
  // Points in label order v1, v2, v3, v4.
  std::vector<Vec> v;
};

ClothespinShape require_clothespin(const SimplicialComplex& k) {
  if (k.ambient_dim != 2 || k.vertex_count() != 4) {
    throw std::invalid_argument("clothespin complexes have four planar vertices");
  }
  std::vector<std::vector<int>> expected = {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}};
  if (k.simplices.size() != expected.size()) {
    throw std::invalid_argument("clothespin complexes have exactly two edges");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (k.simplices[i].v != expected[i]) {
      throw std::invalid_argument("clothespin edges must join v1v2 and v3v4");
    }
  }
  // v3 strictly interior to the triangle v1 v2 v4: barycentric coordinates
  // exist and are strictly positive.
  const Vec& p1 = k.vertices[0];
  const Vec& p2 = k.vertices[1];
  const Vec& p3 = k.vertices[2];
  const Vec& p4 = k.vertices[3];
  Mat m = {
      {p1[0], p2[0], p4[0]},
      {p1[1], p2[1], p4[1]},
      {rat_of(1), rat_of(1), rat_of(1)},
  };
  Vec rhs = {p3[0], p3[1], rat_of(1)};
  const auto lambda = solve_linear(m, rhs);
  if (!lambda) {
    throw std::invalid_argument("clothespin triangle v1 v2 v4 is degenerate");
  }
  for (const Rat& c : *lambda) {
    if (rat_sign(c) <= 0) {
      throw std::invalid_argument("clothespin vertex v3 must lie strictly inside "
                                  "triangle v1 v2 v4");
    }
  }
  return ClothespinShape{{p1, p2, p3, p4}};
}

Ray edge_ray(const Vec& from, const Vec& to) { return ray_of(sub(to, from)); }

}  // namespace

ClothespinRegions clothespin_regions(const SimplicialComplex& k) {
  const ClothespinShape cp = require_clothespin(k);
  const Vec& v1 = cp.v[0];
  const Vec& v2 = cp.v[1];
  const Vec& v3 = cp.v[2];
  const Vec& v4 = cp.v[3];

  const Ray a12 = edge_ray(v1, v2);
  const Ray a14 = edge_ray(v1, v4);
  const Ray a21 = edge_ray(v2, v1);
  const Ray a23 = edge_ray(v2, v3);
  const Ray a32 = edge_ray(v3, v2);
  const Ray a34 = edge_ray(v3, v4);

  ClothespinRegions out;
  // Each region is a symmetric difference of two birth intervals; its two
  // arcs sit a quarter turn on either side of the edge rays at one vertex,
  // open where the first ray's perpendicular leaves and closed where the
  // second one lands on the minus side (mirrored on the plus side).
  out.r1 = CircularRegion{{short_arc(rotate_cw(a12), false, rotate_cw(a14), true),
                           short_arc(rotate_ccw(a12), true, rotate_ccw(a14), false)}};
  out.r2 = CircularRegion{{short_arc(rotate_cw(a23), false, rotate_cw(a21), true),
                           short_arc(rotate_ccw(a23), true, rotate_ccw(a21), false)}};
  out.r3 = CircularRegion{{short_arc(rotate_cw(a32), false, rotate_cw(a34), true),
                           short_arc(rotate_ccw(a32), true, rotate_ccw(a34), false)}};
  out.w = CircularRegion{{short_arc(rotate_cw(a32), true, rotate_cw(a34), true),
                          short_arc(rotate_ccw(a32), true, rotate_ccw(a34), true)}};
  out.r4 = CircularRegion{{short_arc(rotate_cw(a14), false, rotate_cw(a34), true),
                           short_arc(rotate_ccw(a14), true, rotate_ccw(a34), false)}};

  // Defensive: the construction must yield disjoint arc pairs.
  for (const CircularRegion* r : {&out.r1, &out.r2, &out.r3, &out.r4, &out.w}) {
    if (r->arcs.size() == 2 && arcs_intersect(r->arcs[0], r->arcs[1])) {
      throw std::logic_error("clothespin region arcs overlap");
    }
  }
  return out;
}

namespace {

// Splits a clothesline into its clothespin motifs and checks the shape.
std::vector<SimplicialComplex> clothesline_motifs(const SimplicialComplex& k) {
  if (k.ambient_dim != 2) throw std::invalid_argument("clotheslines are planar");
  const int n = k.vertex_count();
  if (n == 0 || n % 4 != 0) {
    throw std::invalid_argument("clotheslines have four vertices per clothespin");
  }
  const int m = n / 4;
  std::vector<std::vector<int>> expected;
  for (int v = 0; v < n; ++v) expected.push_back({v});
  for (int i = 0; i < m; ++i) {
    expected.push_back({4 * i, 4 * i + 1});
    expected.push_back({4 * i + 2, 4 * i + 3});
  }
  std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
    return simplex_order(Simplex{a}, Simplex{b});
  });
  if (k.simplices.size() != expected.size()) {
    throw std::invalid_argument("clothesline has unexpected simplices");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (k.simplices[i].v != expected[i]) {
      throw std::invalid_argument("clothesline has unexpected simplices");
    }
  }
  std::vector<SimplicialComplex> motifs;
  motifs.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Vec> pts = {k.vertices[4 * i], k.vertices[4 * i + 1],
                            k.vertices[4 * i + 2], k.vertices[4 * i + 3]};
    motifs.push_back(
        make_complex(2, pts, std::vector<Simplex>{Simplex{{0, 1}}, Simplex{{2, 3}}}));
  }
  return motifs;
}

}  // namespace

std::vector<CircularRegion> clothesline_wedges(const SimplicialComplex& clothesline) {
  std::vector<CircularRegion> out;
  for (const SimplicialComplex& motif : clothesline_motifs(clothesline)) {
    out.push_back(clothespin_regions(motif).w);
  }
  return out;
}

bool regions_disjoint(const SimplicialComplex& clothesline) {
  const std::vector<CircularRegion> ws = clothesline_wedges(clothesline);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (regions_intersect(ws[i], ws[j])) return false;
    }
  }
  return true;
}

HittingReport hitting_lower_bound(const SimplicialComplex& clothesline,
                                  const std::vector<Vec>& directions) {
  const std::vector<CircularRegion> ws = clothesline_wedges(clothesline);
  HittingReport report;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    bool hit = false;
    for (const Vec& s : directions) {
      if (region_contains(ws[i], ray_of(s))) {
        hit = true;
        break;
      }
    }
    if (!hit) report.uncovered.push_back(static_cast<int>(i));
  }
  report.satisfied = report.uncovered.empty();
  return report;
}

}  // namespace fdesc
