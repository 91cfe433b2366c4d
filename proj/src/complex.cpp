#include "fdesc/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fdesc/linalg.hpp"

namespace fdesc {

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
  return a.v < b.v;
}

std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.v.size() <= 1) return out;
  for (std::size_t skip = 0; skip < s.v.size(); ++skip) {
    Simplex f;
    for (std::size_t i = 0; i < s.v.size(); ++i) {
      if (i != skip) f.v.push_back(s.v[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Simplex> proper_faces(const Simplex& s) {
  std::set<Simplex> acc;
  const std::size_t n = s.v.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t(1) << i)) f.v.push_back(s.v[i]);
    }
    acc.insert(std::move(f));
  }
  return {acc.begin(), acc.end()};
}

bool is_face_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.v.begin(), b.v.end(), a.v.begin(), a.v.end());
}

std::string simplex_str(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.v[i]);
  }
  return out + "}";
}

int SimplicialComplex::top_dim() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, s.dim());
  return d;
}

std::vector<long> SimplicialComplex::simplex_counts_by_dim() const {
  std::vector<long> counts(std::size_t(std::max(0, top_dim() + 1)), 0);
  for (const auto& s : simplices) ++counts[std::size_t(s.dim())];
  return counts;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& s : simplices) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices.begin(), simplices.end(), s, simplex_order);
  if (it != simplices.end() && *it == s) return int(it - simplices.begin());
  return -1;
}

SimplicialComplex make_complex(int ambient_dim, std::vector<Vec> points,
                               const std::vector<Simplex>& generators) {
  if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  for (auto& p : points) {
    if (int(p.size()) != ambient_dim) {
      throw std::invalid_argument("point dimension mismatch");
    }
    // Raw two-argument Rat construction need not be in lowest terms, and
    // exact equality assumes it; normalize at this boundary once.
    for (Rat& c : p) c.canonicalize();
  }
  std::set<Simplex> closed;
  for (std::size_t i = 0; i < points.size(); ++i) closed.insert(Simplex{{int(i)}});
  for (const auto& g : generators) {
    Simplex s = g;
    std::sort(s.v.begin(), s.v.end());
    s.v.erase(std::unique(s.v.begin(), s.v.end()), s.v.end());
    if (s.v.empty()) throw std::invalid_argument("empty simplex");
    for (int idx : s.v) {
      if (idx < 0 || std::size_t(idx) >= points.size()) {
        throw std::invalid_argument("simplex vertex index out of range");
      }
    }
    for (auto& f : proper_faces(s)) closed.insert(std::move(f));
    closed.insert(std::move(s));
  }
  SimplicialComplex k;
  k.ambient_dim = ambient_dim;
  k.vertices = std::move(points);
  k.simplices.assign(closed.begin(), closed.end());
  std::sort(k.simplices.begin(), k.simplices.end(), simplex_order);
  return k;
}

namespace {

/* Visit all index combinations of the given size; f returns false to stop. */
template <typename F>
void for_each_combination(int n, int size, F&& f) {
  if (size > n || size <= 0) return;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    int i = size - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - size + i) --i;
    if (i < 0) return;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < size; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

std::vector<Vec> gather_points(const std::vector<Vec>& points, const std::vector<int>& idx) {
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(points[std::size_t(i)]);
  return out;
}

bool points_in_general_position(const std::vector<Vec>& points, int ambient_dim) {
  bool ok = true;
  const int n = int(points.size());
  for (int size = 2; size <= ambient_dim + 1 && ok; ++size) {
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      if (!affinely_independent(gather_points(points, idx))) {
        ok = false;
        return false;
      }
      return true;
    });
  }
  return ok;
}

}  // namespace

std::vector<Violation> validate(const SimplicialComplex& k) {
  std::vector<Violation> report;
  const int n = int(k.vertices.size());
  for (int i = 0; i < n; ++i) {
    if (int(k.vertices[std::size_t(i)].size()) != k.ambient_dim) {
      report.push_back({ViolationKind::WrongPointDimension, {i},
                        "vertex " + std::to_string(i) + " has wrong coordinate count"});
    }
  }
  std::set<Simplex> seen;
  for (const auto& s : k.simplices) {
    if (s.v.empty() || !std::is_sorted(s.v.begin(), s.v.end()) ||
        std::adjacent_find(s.v.begin(), s.v.end()) != s.v.end()) {
      report.push_back({ViolationKind::MalformedSimplex, s.v, "simplex " + simplex_str(s)});
      continue;
    }
    bool bad_index = false;
    for (int idx : s.v) {
      if (idx < 0 || idx >= n) {
        report.push_back({ViolationKind::BadVertexIndex, s.v,
                          "simplex " + simplex_str(s) + " references vertex " + std::to_string(idx)});
        bad_index = true;
      }
    }
    if (bad_index) continue;
    if (!seen.insert(s).second) {
      report.push_back({ViolationKind::DuplicateSimplex, s.v, "simplex " + simplex_str(s)});
      continue;
    }
    if (int(s.v.size()) > k.ambient_dim + 1) {
      report.push_back({ViolationKind::SimplexExceedsAmbient, s.v,
                        "simplex " + simplex_str(s) + " cannot embed in dimension " +
                            std::to_string(k.ambient_dim)});
    }
  }
  for (const auto& s : k.simplices) {
    if (!seen.count(s)) continue;  // malformed entries skip the closure check
    for (const auto& f : facets(s)) {
      if (!seen.count(f)) {
        report.push_back({ViolationKind::MissingFace, f.v,
                          "face " + simplex_str(f) + " of " + simplex_str(s) + " is missing"});
      }
    }
  }
  // General position: report minimal affinely dependent subsets of size <= d+1.
  bool coords_ok = true;
  for (const auto& p : k.vertices) {
    if (int(p.size()) != k.ambient_dim) coords_ok = false;
  }
  if (coords_ok) {
    std::vector<std::vector<int>> minimal_bad;
    for (int size = 2; size <= k.ambient_dim + 1; ++size) {
      for_each_combination(n, size, [&](const std::vector<int>& idx) {
        for (const auto& bad : minimal_bad) {
          if (std::includes(idx.begin(), idx.end(), bad.begin(), bad.end())) return true;
        }
        if (!affinely_independent(gather_points(k.vertices, idx))) {
          minimal_bad.push_back(idx);
          std::string names;
          for (int i : idx) names += (names.empty() ? "" : ",") + std::to_string(i);
          report.push_back({ViolationKind::AffinelyDependentVertices, idx,
                            "vertices {" + names + "} are affinely dependent"});
        }
        return true;
      });
    }
  }
  return report;
}

bool general_position_ok(const SimplicialComplex& k) {
  return points_in_general_position(k.vertices, k.ambient_dim);
}

SimplicialComplex canonical_form(const SimplicialComplex& k) {
  std::vector<int> order(k.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (k.vertices[std::size_t(a)] != k.vertices[std::size_t(b)]) {
      return k.vertices[std::size_t(a)] < k.vertices[std::size_t(b)];
    }
    return a < b;
  });
  std::vector<int> new_index(k.vertices.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) new_index[std::size_t(order[pos])] = int(pos);
  SimplicialComplex out;
  out.ambient_dim = k.ambient_dim;
  for (int old : order) out.vertices.push_back(k.vertices[std::size_t(old)]);
  for (const auto& s : k.simplices) {
    Simplex t;
    for (int idx : s.v) t.v.push_back(new_index[std::size_t(idx)]);
    std::sort(t.v.begin(), t.v.end());
    out.simplices.push_back(std::move(t));
  }
  std::sort(out.simplices.begin(), out.simplices.end(), simplex_order);
  return out;
}

bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  const auto ca = canonical_form(a), cb = canonical_form(b);
  return ca.vertices == cb.vertices && ca.simplices == cb.simplices;
}

namespace {

/* x in conv(points)? Exact, via affinely independent subsets (any point of
 * a convex hull lies in the hull of an affinely independent subset). */
bool in_convex_hull(const std::vector<Vec>& pts, const Vec& x, int ambient_dim) {
  auto barycentric_inside = [&](const std::vector<Vec>& sub) {
    // Solve sum(l_i * p_i) = x, sum(l_i) = 1 and test l >= 0.
    Mat a(std::size_t(ambient_dim) + 1, Vec(sub.size(), Rat(0)));
    Vec b(std::size_t(ambient_dim) + 1, Rat(0));
    for (int r = 0; r < ambient_dim; ++r) {
      for (std::size_t c = 0; c < sub.size(); ++c) a[std::size_t(r)][c] = sub[c][std::size_t(r)];
      b[std::size_t(r)] = x[std::size_t(r)];
    }
    for (std::size_t c = 0; c < sub.size(); ++c) a[std::size_t(ambient_dim)][c] = 1;
    b[std::size_t(ambient_dim)] = 1;
    auto sol = solve_linear(a, b);
    if (!sol) return false;
    for (const auto& l : *sol) {
      if (l < 0) return false;
    }
    return true;
  };
  if (affinely_independent(pts)) return barycentric_inside(pts);
  const int n = int(pts.size());
  for (int size = 1; size <= n; ++size) {
    bool found = false;
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      auto sub = gather_points(pts, idx);
      if (affinely_independent(sub) && barycentric_inside(sub)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

bool point_membership(const SimplicialComplex& k, const Vec& x) {
  if (int(x.size()) != k.ambient_dim) throw std::invalid_argument("query point dimension mismatch");
  for (const auto& s : k.simplices) {
    std::vector<Vec> pts;
    for (int idx : s.v) pts.push_back(k.vertices[std::size_t(idx)]);
    if (in_convex_hull(pts, x, k.ambient_dim)) return true;
  }
  return false;
}

SimplicialComplex barycentric_subdivide_edge(const SimplicialComplex& k, const Simplex& e) {
  if (e.v.size() != 2) throw std::invalid_argument("subdivision target must be an edge");
  if (!k.has(e)) throw std::invalid_argument("edge " + simplex_str(e) + " not in complex");
  for (const auto& s : k.simplices) {
    if (s.dim() > 2 && is_face_of(e, s)) {
      throw std::invalid_argument("edge lies in a simplex of dimension > 2");
    }
  }
  const int a = e.v[0], b = e.v[1];
  const int mid = int(k.vertices.size());
  std::vector<Vec> points = k.vertices;
  points.push_back(scale(rat_of(1, 2), add(k.vertices[std::size_t(a)], k.vertices[std::size_t(b)])));
  std::vector<Simplex> generators;
  for (const auto& s : k.simplices) {
    if (!is_face_of(e, s)) {
      generators.push_back(s);
      continue;
    }
    if (s.dim() == 1) {
      generators.push_back(Simplex{{a, mid}});
      generators.push_back(Simplex{{mid, b}});
    } else {  // triangle {a, b, c}
      int c = -1;
      for (int idx : s.v) {
        if (idx != a && idx != b) c = idx;
      }
      generators.push_back(Simplex{{a, mid, c}});
      generators.push_back(Simplex{{mid, b, c}});
    }
  }
  return make_complex(k.ambient_dim, std::move(points), generators);
}

std::vector<SimplicialComplex> enumerate_subcomplexes(int ambient_dim,
                                                      const std::vector<Vec>& points,
                                                      int max_dim, std::uint64_t budget) {
  // Degenerate (affinely dependent) placements are permitted — validate() reports
  // them as findings — but duplicate points would make complex identity ambiguous.
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("enumeration requires pairwise distinct points");
      }
    }
  }
  const int n = int(points.size());
  std::vector<Simplex> candidates;
  const int max_size = std::min(max_dim + 1, ambient_dim + 1);
  for (int size = 2; size <= std::min(max_size, n); ++size) {
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      candidates.push_back(Simplex{idx});
      return true;
    });
  }
  std::sort(candidates.begin(), candidates.end(), simplex_order);
  const std::size_t c = candidates.size();
  if (c >= 63 || (std::uint64_t(1) << c) > budget) {
    throw std::length_error("enumeration budget exceeded: 2^" + std::to_string(c) +
                            " candidate complexes");
  }
  // requirement[i] = bitmask of candidate facets that must accompany candidate i.
  std::vector<std::uint64_t> requirement(c, 0);
  std::map<Simplex, std::size_t> pos;
  for (std::size_t i = 0; i < c; ++i) pos[candidates[i]] = i;
  for (std::size_t i = 0; i < c; ++i) {
    for (const auto& f : facets(candidates[i])) {
      if (f.v.size() >= 2) requirement[i] |= (std::uint64_t(1) << pos.at(f));
    }
  }
  std::vector<SimplicialComplex> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < c && closed; ++i) {
      if ((mask >> i) & 1) closed = (requirement[i] & ~mask) == 0;
    }
    if (!closed) continue;
    std::vector<Simplex> gens;
    for (std::size_t i = 0; i < c; ++i) {
      if ((mask >> i) & 1) gens.push_back(candidates[i]);
    }
    out.push_back(make_complex(ambient_dim, points, gens));
  }
  return out;
}

std::vector<SimplicialComplex> enumerate_on_point_subsets(int ambient_dim,
                                                          const std::vector<Vec>& pool,
                                                          int max_dim, std::size_t max_vertices,
                                                          std::uint64_t budget) {
  std::vector<SimplicialComplex> out;
  const int n = int(pool.size());
  for (int size = 1; size <= int(std::min(max_vertices, std::size_t(n))); ++size) {
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      auto pts = gather_points(pool, idx);
      auto batch = enumerate_subcomplexes(ambient_dim, pts, max_dim, budget);
      if (out.size() + batch.size() > budget) {
        throw std::length_error("enumeration budget exceeded over point subsets");
      }
      out.insert(out.end(), batch.begin(), batch.end());
      return true;
    });
  }
  return out;
}

}  // namespace fdesc
