#include "fdesc/filtration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fdesc {

void require_direction(const Direction& s, int ambient_dim) {
  if (static_cast<int>(s.size()) != ambient_dim) {
    throw std::invalid_argument("direction has dimension " + std::to_string(s.size()) +
                                ", expected " + std::to_string(ambient_dim));
  }
  if (is_zero_vec(s)) {
    throw std::invalid_argument("direction must be nonzero");
  }
}

FilterAssignment lower_star(const SimplicialComplex& k, const Direction& s) {
  require_direction(s, k.ambient_dim);
  // Heights feed exact-equality comparisons, so normalize the direction in
  // case a caller built it from a raw two-argument Rat constructor.
  Direction sc = s;
  for (Rat& c : sc) c.canonicalize();
  std::vector<Rat> vertex_height(k.vertices.size());
  for (std::size_t i = 0; i < k.vertices.size(); ++i) {
    vertex_height[i] = dot(sc, k.vertices[i]);
  }
  FilterAssignment f;
  f.value.reserve(k.simplices.size());
  for (const Simplex& sigma : k.simplices) {
    Rat h = vertex_height[sigma.v.front()];
    for (std::size_t i = 1; i < sigma.v.size(); ++i) {
      const Rat& hv = vertex_height[sigma.v[i]];
      if (hv > h) h = hv;
    }
    f.value.push_back(h);
  }
  return f;
}

bool filter_monotone(const SimplicialComplex& k, const FilterAssignment& f) {
  if (f.value.size() != k.simplices.size()) return false;
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    for (const Simplex& face : facets(k.simplices[i])) {
      int j = k.index_of(face);
      if (j < 0) return false;
      if (f.value[j] > f.value[i]) return false;
    }
  }
  return true;
}

namespace {

// Positions of the facets of each simplex, by simplex index.
std::vector<std::vector<int>> facet_indices(const SimplicialComplex& k) {
  std::vector<std::vector<int>> out(k.simplices.size());
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    for (const Simplex& face : facets(k.simplices[i])) {
      int j = k.index_of(face);
      if (j < 0) throw std::invalid_argument("complex is not closed under faces");
      out[i].push_back(j);
    }
  }
  return out;
}

}  // namespace

IndexFilter index_filter(const SimplicialComplex& k, const FilterAssignment& f,
                         const TieRule& tie) {
  const std::size_t n = k.simplices.size();
  if (f.value.size() != n) {
    throw std::invalid_argument("filter length does not match simplex count");
  }
  if (!tie.priority.empty() && tie.priority.size() != n) {
    throw std::invalid_argument("tie rule length does not match simplex count");
  }
  if (!filter_monotone(k, f)) {
    throw std::invalid_argument("filter is not monotone under the face relation");
  }

  // Simplices at strictly lower heights come first; within one height class
  // we run a topological sort of the face relation, always emitting the
  // ready simplex of smallest priority.  With the default rule (dimension,
  // then lexicographic vertex list) the priority order itself already puts
  // faces first, but the Kahn construction keeps arbitrary tie rules safe.
  std::vector<int> order_of(n);
  std::iota(order_of.begin(), order_of.end(), 0);
  auto priority_less = [&](int a, int b) {
    if (tie.priority.empty()) return simplex_order(k.simplices[a], k.simplices[b]);
    if (tie.priority[a] != tie.priority[b]) return tie.priority[a] < tie.priority[b];
    return simplex_order(k.simplices[a], k.simplices[b]);
  };

  std::map<Rat, std::vector<int>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[f.value[i]].push_back(static_cast<int>(i));

  const std::vector<std::vector<int>> faces = facet_indices(k);

  IndexFilter order;
  order.reserve(n);
  for (auto& [height, members] : classes) {
    // Count unplaced faces within this height class; faces at lower heights
    // are already emitted.
    std::vector<int> pending(n, -1);
    std::vector<std::vector<int>> cofaces_in_class(n);
    for (int idx : members) {
      int cnt = 0;
      for (int fidx : faces[idx]) {
        if (f.value[fidx] == height) {
          ++cnt;
          cofaces_in_class[fidx].push_back(idx);
        }
      }
      pending[idx] = cnt;
    }
    auto heap_less = [&](int a, int b) { return priority_less(b, a); };  // min-heap
    std::priority_queue<int, std::vector<int>, decltype(heap_less)> ready(heap_less);
    for (int idx : members) {
      if (pending[idx] == 0) ready.push(idx);
    }
    std::size_t emitted = 0;
    while (!ready.empty()) {
      int idx = ready.top();
      ready.pop();
      order.push_back(idx);
      ++emitted;
      for (int c : cofaces_in_class[idx]) {
        if (--pending[c] == 0) ready.push(c);
      }
    }
    if (emitted != members.size()) {
      throw std::logic_error("face relation cycle within a height class");
    }
  }
  return order;
}

bool compatible_index_filter(const SimplicialComplex& k, const FilterAssignment& f,
                             const IndexFilter& order) {
  const std::size_t n = k.simplices.size();
  if (order.size() != n || f.value.size() != n) return false;
  std::vector<int> position(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    int idx = order[p];
    if (idx < 0 || idx >= static_cast<int>(n) || position[idx] != -1) return false;
    position[idx] = static_cast<int>(p);
  }
  // Strictly lower filter value implies strictly earlier position.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (f.value[a] < f.value[b] && position[a] >= position[b]) return false;
    }
  }
  // Every proper face precedes its coface.
  for (std::size_t i = 0; i < n; ++i) {
    for (const Simplex& face : facets(k.simplices[i])) {
      int j = k.index_of(face);
      if (j < 0 || position[j] >= position[i]) return false;
    }
  }
  return true;
}

std::vector<Rat> critical_heights(const FilterAssignment& f) {
  std::vector<Rat> heights = f.value;
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  return heights;
}

std::vector<char> sublevel_mask(const FilterAssignment& f, const Rat& t) {
  std::vector<char> mask(f.value.size(), 0);
  for (std::size_t i = 0; i < f.value.size(); ++i) {
    if (f.value[i] <= t) mask[i] = 1;
  }
  return mask;
}

SimplicialComplex sublevel(const SimplicialComplex& k, const FilterAssignment& f, const Rat& t) {
  const std::vector<char> mask = sublevel_mask(f, t);
  std::vector<int> new_vertex(k.vertices.size(), -1);
  std::vector<Vec> points;
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    if (mask[i] && k.simplices[i].dim() == 0) {
      new_vertex[k.simplices[i].v[0]] = static_cast<int>(points.size());
      points.push_back(k.vertices[k.simplices[i].v[0]]);
    }
  }
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    if (!mask[i]) continue;
    Simplex s;
    s.v.reserve(k.simplices[i].v.size());
    for (int v : k.simplices[i].v) s.v.push_back(new_vertex[v]);
    simplices.push_back(std::move(s));
  }
  return make_complex(k.ambient_dim, points, simplices);
}

}  // namespace fdesc
