#include "fdesc/fixtures.hpp"

#include <stdexcept>
#include <string>

#include "fdesc/linalg.hpp"
#include "fdesc/observability.hpp"

namespace fdesc {

namespace {

std::vector<Simplex> gens(std::initializer_list<std::vector<int>> ls) {
  std::vector<Simplex> out;
  for (const auto& v : ls) out.push_back(Simplex{v});
  return out;
}

}  // namespace

SimplicialComplex single_edge() {
  std::vector<Vec> pts = {{rat_of(1), rat_of(1)}, {rat_of(1), rat_of(2)}};
  return make_complex(2, pts, gens({{0, 1}}));
}

namespace {

std::vector<Vec> square_corners() {
  return {{rat_of(0), rat_of(0)},
          {rat_of(0), rat_of(1)},
          {rat_of(1), rat_of(0)},
          {rat_of(1), rat_of(1)}};
}

}  // namespace

SimplicialComplex square_a() {
  return make_complex(2, square_corners(), gens({{0, 3}, {1, 3}}));
}

SimplicialComplex square_b() {
  return make_complex(2, square_corners(), gens({{1, 3}, {1, 2}}));
}

SimplicialComplex fan_graph() {
  std::vector<Vec> pts = {{rat_of(0), rat_of(0)},
                          {rat_of(1), rat_of(2)},
                          {rat_of(2), rat_of(0)},
                          {rat_of(3), rat_of(1)}};
  return make_complex(2, pts, gens({{1, 2}, {0, 3}, {1, 3}, {2, 3}}));
}

SimplicialComplex sparse_graph(int d, int n1) {
  if (d <= 2) throw std::invalid_argument("sparse graphs need ambient dimension > 2");
  if (n1 < 1 || n1 >= d - 1) {
    throw std::invalid_argument("sparse graphs need 1 <= n1 < d - 1 edges");
  }
  // Base points ride a moment curve so the vertex set stays in general
  // position; exact validation decides, shifting the parameters on failure.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> pts;
    std::vector<Simplex> edges;
    for (int i = 0; i < n1; ++i) {
      const Rat t = rat_of(1 + i + attempt * n1);
      Vec base(d);
      Rat power = t;
      for (int j = 0; j < d; ++j) {
        base[j] = power;
        power *= t;
      }
      Vec tip = base;
      tip[i] += 1;
      const int a = static_cast<int>(pts.size());
      pts.push_back(std::move(base));
      pts.push_back(std::move(tip));
      edges.push_back(Simplex{{a, a + 1}});
    }
    SimplicialComplex k = make_complex(d, pts, edges);
    if (general_position_ok(k)) return k;
  }
  throw std::logic_error("could not place sparse graph in general position");
}

namespace {

// Barycentric coordinates of p with respect to the plane triangle x, y, z.
std::optional<Vec> barycentric(const Vec& p, const Vec& x, const Vec& y, const Vec& z) {
  Mat m = {
      {x[0], y[0], z[0]},
      {x[1], y[1], z[1]},
      {rat_of(1), rat_of(1), rat_of(1)},
  };
  Vec rhs = {p[0], p[1], rat_of(1)};
  return solve_linear(m, rhs);
}

bool in_closed_triangle(const Vec& p, const Vec& x, const Vec& y, const Vec& z) {
  const auto lambda = barycentric(p, x, y, z);
  if (!lambda) return false;
  for (const Rat& c : *lambda) {
    if (rat_sign(c) < 0) return false;
  }
  return true;
}

bool in_open_triangle(const Vec& p, const Vec& x, const Vec& y, const Vec& z) {
  const auto lambda = barycentric(p, x, y, z);
  if (!lambda) return false;
  for (const Rat& c : *lambda) {
    if (rat_sign(c) <= 0) return false;
  }
  return true;
}

}  // namespace

SimplicialComplex build_clothespin(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  for (const Vec* p : {&a, &b, &c, &d}) {
    if (p->size() != 2) throw std::invalid_argument("clothespin points must be planar");
  }
  std::vector<Vec> pts = {a, b, c, d};
  SimplicialComplex k = make_complex(2, pts, gens({{0, 1}, {2, 3}}));
  if (!general_position_ok(k)) {
    throw std::invalid_argument("clothespin points must be in general position");
  }
  if (!in_open_triangle(c, a, b, d)) {
    throw std::invalid_argument("clothespin vertex c must lie strictly inside triangle abd");
  }
  if (in_closed_triangle(a, b, c, d) || in_closed_triangle(b, a, c, d) ||
      in_closed_triangle(d, a, b, c)) {
    throw std::invalid_argument("clothespin corner lies in the hull of the other vertices");
  }
  return k;
}

SimplicialComplex standard_clothespin() {
  const Vec a = {rat_of(-8, 5), rat_of(-4, 5)};
  const Vec b = {rat_of(1), rat_of(0)};
  const Vec c = {rat_of(0), rat_of(0)};
  const Vec d = {rat_of(3, 5), rat_of(4, 5)};
  return build_clothespin(a, b, c, d);
}

namespace {

Vec rotate_by(const Vec& u, long n) {
  // Rotation by the rational point ((n^2-1)/(n^2+1), 2n/(n^2+1)) of the unit
  // circle, scaled by n^2+1: counterclockwise by an angle that shrinks to
  // zero as n grows.
  const Rat c = rat_of(n * n - 1);
  const Rat s = rat_of(2 * n);
  Vec out(2);
  out[0] = c * u[0] - s * u[1];
  out[1] = s * u[0] + c * u[1];
  return out;
}

}  // namespace

SimplicialComplex build_clothesline(int m) {
  if (m < 1) throw std::invalid_argument("clotheslines need at least one clothespin");
  const long mm = static_cast<long>(m);
  // Motif directions on the rational unit circle at strictly increasing
  // angles in [0, pi/2).
  std::vector<Vec> base_dirs;
  for (long i = 0; i < mm; ++i) {
    base_dirs.push_back({rat_of(mm * mm - i * i), rat_of(2 * i * mm)});
  }

  for (long n = 2; n <= (1L << 24); n *= 2) {
    std::vector<Vec> wedge_dirs;
    wedge_dirs.reserve(base_dirs.size());
    for (const Vec& u : base_dirs) wedge_dirs.push_back(rotate_by(u, n));

    for (int attempt = 0; attempt < 64; ++attempt) {
      // Spread the motifs along a parabola wide enough to separate them;
      // exact validation has the final say, widening on failure.
      const Rat spread = rat_of((attempt + 1) * (8 * mm * mm * (n * n + 1) + 1));
      std::vector<Vec> pts;
      std::vector<Simplex> edges;
      for (long i = 0; i < mm; ++i) {
        Vec o = {spread * rat_of(i), spread * rat_of(i * i + 1)};
        const Vec& u = base_dirs[i];
        const Vec& w = wedge_dirs[i];
        Vec v1 = sub(o, add(u, w));
        Vec v2 = add(o, u);
        Vec v3 = o;
        Vec v4 = add(o, w);
        const int at = static_cast<int>(pts.size());
        pts.push_back(std::move(v1));
        pts.push_back(std::move(v2));
        pts.push_back(std::move(v3));
        pts.push_back(std::move(v4));
        edges.push_back(Simplex{{at, at + 1}});
        edges.push_back(Simplex{{at + 2, at + 3}});
      }
      SimplicialComplex k = make_complex(2, pts, edges);
      if (!general_position_ok(k)) continue;
      if (regions_disjoint(k)) return k;
      break;  // overlap depends only on the angles; shrink the wedges
    }
  }
  throw std::logic_error("could not certify disjoint clothesline regions");
}

SimplicialComplex clothesline_edge_swap(const SimplicialComplex& clothesline, int motif) {
  const int n = clothesline.vertex_count();
  if (clothesline.ambient_dim != 2 || n % 4 != 0) {
    throw std::invalid_argument("edge swap expects a clothesline complex");
  }
  const int m = n / 4;
  if (motif < 0 || motif >= m) throw std::invalid_argument("clothesline motif out of range");
  std::vector<Simplex> edges;
  for (int i = 0; i < m; ++i) {
    if (i == motif) {
      edges.push_back(Simplex{{4 * i, 4 * i + 3}});
      edges.push_back(Simplex{{4 * i + 1, 4 * i + 2}});
    } else {
      edges.push_back(Simplex{{4 * i, 4 * i + 1}});
      edges.push_back(Simplex{{4 * i + 2, 4 * i + 3}});
    }
  }
  return make_complex(2, clothesline.vertices, edges);
}

}  // namespace fdesc
