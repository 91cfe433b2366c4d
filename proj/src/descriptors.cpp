#include "fdesc/descriptors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fdesc {

const char* descriptor_name(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::PD: return "pd";
    case DescriptorKind::APD: return "apd";
    case DescriptorKind::BC: return "bc";
    case DescriptorKind::ABC: return "abc";
    case DescriptorKind::ECC: return "ecc";
    case DescriptorKind::AECC: return "aecc";
    case DescriptorKind::DV: return "dv";
    case DescriptorKind::D0: return "d0";
    case DescriptorKind::DR: return "dr";
  }
  throw std::logic_error("unreachable descriptor kind");
}

std::optional<DescriptorKind> descriptor_from_name(const std::string& name) {
  static const std::map<std::string, DescriptorKind> table = {
      {"pd", DescriptorKind::PD},     {"apd", DescriptorKind::APD},
      {"bc", DescriptorKind::BC},     {"abc", DescriptorKind::ABC},
      {"ecc", DescriptorKind::ECC},   {"aecc", DescriptorKind::AECC},
      {"dv", DescriptorKind::DV},     {"d0", DescriptorKind::D0},
      {"dr", DescriptorKind::DR},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool descriptor_param_is_point(DescriptorKind kind) { return kind == DescriptorKind::DR; }

bool descriptor_is_verbose(DescriptorKind kind) {
  return kind == DescriptorKind::APD || kind == DescriptorKind::ABC ||
         kind == DescriptorKind::AECC;
}

void normalize_diagram(Diagram& d) {
  auto less = [](const DiagramPoint& a, const DiagramPoint& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    const bool a_fin = a.death.has_value();
    const bool b_fin = b.death.has_value();
    if (a_fin != b_fin) return a_fin;  // finite deaths before infinite
    if (a_fin && *a.death != *b.death) return *a.death < *b.death;
    return false;
  };
  std::sort(d.points.begin(), d.points.end(), less);
}

StepFunction normalize_step(int width, std::vector<std::pair<Rat, std::vector<long>>> raw) {
  if (width <= 0) throw std::invalid_argument("step function width must be positive");
  for (const auto& [h, v] : raw) {
    if (static_cast<int>(v.size()) != width) {
      throw std::invalid_argument("step event width mismatch");
    }
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  StepFunction out;
  out.width = width;
  std::vector<long> current(width, 0);
  for (auto& [h, v] : raw) {
    if (!out.events.empty() && out.events.back().first == h) {
      // Later sample at the same height wins.
      if (out.events.back().second != v) {
        out.events.back().second = v;
      }
    } else if (v != current) {
      out.events.emplace_back(h, v);
    } else {
      continue;
    }
    current = out.events.back().second;
  }
  // Collapse any event made redundant by a same-height overwrite.
  std::vector<std::pair<Rat, std::vector<long>>> squeezed;
  std::vector<long> prev(width, 0);
  for (auto& ev : out.events) {
    if (ev.second != prev) {
      prev = ev.second;
      squeezed.push_back(std::move(ev));
    }
  }
  out.events = std::move(squeezed);
  return out;
}

std::vector<long> step_value_at(const StepFunction& f, const Rat& t) {
  std::vector<long> value(f.width, 0);
  for (const auto& [h, v] : f.events) {
    if (h <= t) {
      value = v;
    } else {
      break;
    }
  }
  return value;
}

std::vector<long> step_final_value(const StepFunction& f) {
  if (f.events.empty()) return std::vector<long>(f.width, 0);
  return f.events.back().second;
}

namespace {

struct FiltrationData {
  FilterAssignment f;
  IndexFilter order;
  Pairing pairing;
};

FiltrationData run_filtration(const SimplicialComplex& k, const Direction& s,
                               const TieRule& tie) {
  FiltrationData d;
  d.f = lower_star(k, s);
  d.order = index_filter(k, d.f, tie);
  d.pairing = reduce_boundary(k, d.order);
  return d;
}

}  // namespace

Diagram compute_diagram(const SimplicialComplex& k, const Direction& s, bool verbose,
                        const TieRule& tie) {
  const FiltrationData fd = run_filtration(k, s, tie);
  Diagram d;
  d.verbose = verbose;
  for (const auto& [birth_pos, death_pos] : fd.pairing.pairs) {
    DiagramPoint p;
    p.birth = fd.f.value[fd.order[birth_pos]];
    p.death = fd.f.value[fd.order[death_pos]];
    p.degree = k.simplices[fd.order[birth_pos]].dim();
    if (!verbose && *p.death == p.birth) continue;  // drop diagonal points
    d.points.push_back(std::move(p));
  }
  for (int pos : fd.pairing.essentials) {
    DiagramPoint p;
    p.birth = fd.f.value[fd.order[pos]];
    p.death = std::nullopt;
    p.degree = k.simplices[fd.order[pos]].dim();
    d.points.push_back(std::move(p));
  }
  normalize_diagram(d);
  return d;
}

BettiFamily compute_betti_curves(const SimplicialComplex& k, const Direction& s) {
  // Deliberately rank-based (no reduction pairing): this is the reference
  // route the diagram-to-curve reductions are checked against.
  const FilterAssignment f = lower_star(k, s);
  const std::vector<Rat> heights = critical_heights(f);
  BettiFamily fam;
  fam.verbose = false;
  for (int degree = 0; degree <= k.top_dim(); ++degree) {
    std::vector<std::pair<Rat, std::vector<long>>> raw;
    raw.reserve(heights.size());
    for (const Rat& t : heights) {
      raw.emplace_back(t, std::vector<long>{sublevel_betti(k, f, t, degree)});
    }
    StepFunction curve = normalize_step(1, std::move(raw));
    if (!curve.events.empty()) fam.by_degree.emplace(degree, std::move(curve));
  }
  return fam;
}

BettiFamily compute_signed_count_curves(const SimplicialComplex& k, const Direction& s,
                                        const TieRule& tie) {
  // Counts are indexed by homological degree: the degree-k pair tracks
  // positive simplices of dimension k (class creators) and negative
  // simplices of dimension k+1 (class destroyers).
  const FiltrationData fd = run_filtration(k, s, tie);
  const std::size_t n = k.simplices.size();
  const std::vector<SimplexSign> signs = simplex_signs(fd.pairing, n);
  BettiFamily fam;
  fam.verbose = true;
  for (int degree = 0; degree <= k.top_dim(); ++degree) {
    std::map<Rat, std::pair<long, long>> delta;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const int idx = fd.order[pos];
      const int dim = k.simplices[idx].dim();
      if (dim == degree && signs[pos] == SimplexSign::Positive) {
        ++delta[fd.f.value[idx]].first;
      } else if (dim == degree + 1 && signs[pos] == SimplexSign::Negative) {
        ++delta[fd.f.value[idx]].second;
      }
    }
    std::vector<std::pair<Rat, std::vector<long>>> raw;
    long cum_pos = 0;
    long cum_neg = 0;
    for (const auto& [h, d] : delta) {
      cum_pos += d.first;
      cum_neg += d.second;
      raw.emplace_back(h, std::vector<long>{cum_pos, cum_neg});
    }
    StepFunction curve = normalize_step(2, std::move(raw));
    if (!curve.events.empty()) fam.by_degree.emplace(degree, std::move(curve));
  }
  return fam;
}

StepFunction compute_euler_curve(const SimplicialComplex& k, const Direction& s) {
  // Direct alternating count of simplices by height; independent of both
  // the pairing and the Betti-curve route.
  const FilterAssignment f = lower_star(k, s);
  std::map<Rat, long> delta;
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    delta[f.value[i]] += (k.simplices[i].dim() % 2 == 0) ? 1 : -1;
  }
  std::vector<std::pair<Rat, std::vector<long>>> raw;
  long chi = 0;
  for (const auto& [h, d] : delta) {
    chi += d;
    raw.emplace_back(h, std::vector<long>{chi});
  }
  return normalize_step(1, std::move(raw));
}

StepFunction compute_parity_count_curve(const SimplicialComplex& k, const Direction& s) {
  const FilterAssignment f = lower_star(k, s);
  std::map<Rat, std::pair<long, long>> delta;
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    auto& [even_cnt, odd_cnt] = delta[f.value[i]];
    if (k.simplices[i].dim() % 2 == 0) {
      ++even_cnt;
    } else {
      ++odd_cnt;
    }
  }
  std::vector<std::pair<Rat, std::vector<long>>> raw;
  long even = 0;
  long odd = 0;
  for (const auto& [h, d] : delta) {
    even += d.first;
    odd += d.second;
    raw.emplace_back(h, std::vector<long>{even, odd});
  }
  return normalize_step(2, std::move(raw));
}

VertexSummary compute_vertex_summary(const SimplicialComplex& k, const Direction& s) {
  require_direction(s, k.ambient_dim);
  if (k.vertices.empty()) throw std::invalid_argument("complex has no vertices");
  VertexSummary out;
  out.vertex_count = static_cast<long>(k.vertices.size());
  Rat best = dot(s, k.vertices.front());
  for (std::size_t i = 1; i < k.vertices.size(); ++i) {
    Rat h = dot(s, k.vertices[i]);
    if (h < best) best = h;
  }
  for (const Vec& p : k.vertices) {
    Rat pv = dot(s, p);
    if (pv == best) out.lowest.push_back(p);
  }
  std::sort(out.lowest.begin(), out.lowest.end(),
            [](const Vec& a, const Vec& b) {
              for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return a.size() < b.size();
            });
  return out;
}

DescriptorValue compute(const SimplicialComplex& k, DescriptorKind kind, const Vec& param) {
  DescriptorValue out;
  out.kind = kind;
  switch (kind) {
    case DescriptorKind::PD:
      out.payload = compute_diagram(k, param, /*verbose=*/false);
      break;
    case DescriptorKind::APD:
      out.payload = compute_diagram(k, param, /*verbose=*/true);
      break;
    case DescriptorKind::BC:
      out.payload = compute_betti_curves(k, param);
      break;
    case DescriptorKind::ABC:
      out.payload = compute_signed_count_curves(k, param);
      break;
    case DescriptorKind::ECC:
      out.payload = compute_euler_curve(k, param);
      break;
    case DescriptorKind::AECC:
      out.payload = compute_parity_count_curve(k, param);
      break;
    case DescriptorKind::DV:
      out.payload = compute_vertex_summary(k, param);
      break;
    case DescriptorKind::D0:
      require_direction(param, k.ambient_dim);
      out.payload = static_cast<long>(0);
      break;
    case DescriptorKind::DR:
      if (static_cast<int>(param.size()) != k.ambient_dim) {
        throw std::invalid_argument("query point has wrong dimension");
      }
      out.payload = point_membership(k, param);
      break;
  }
  return out;
}

std::vector<DescriptorValue> descriptor_set(const SimplicialComplex& k, DescriptorKind kind,
                                            const std::vector<Vec>& params) {
  std::vector<DescriptorValue> out;
  out.reserve(params.size());
  for (const Vec& p : params) out.push_back(compute(k, kind, p));
  return out;
}

bool equal(const DescriptorValue& a, const DescriptorValue& b) {
  if (a.kind != b.kind) {
    throw std::invalid_argument("cannot compare descriptor values of different kinds");
  }
  return a.payload == b.payload;
}

namespace {

std::string step_str(const StepFunction& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [h, v] : f.events) {
    if (!first) os << ", ";
    first = false;
    os << rat_str(h) << ": ";
    if (f.width == 1) {
      os << v[0];
    } else {
      os << "(";
      for (int i = 0; i < f.width; ++i) {
        if (i) os << ",";
        os << v[i];
      }
      os << ")";
    }
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string descriptor_value_str(const DescriptorValue& v) {
  std::ostringstream os;
  os << descriptor_name(v.kind) << " ";
  if (const auto* d = std::get_if<Diagram>(&v.payload)) {
    os << "{";
    bool first = true;
    for (const DiagramPoint& p : d->points) {
      if (!first) os << ", ";
      first = false;
      os << "deg" << p.degree << ":(" << rat_str(p.birth) << ",";
      if (p.death) {
        os << rat_str(*p.death);
      } else {
        os << "inf";
      }
      os << ")";
    }
    os << "}";
  } else if (const auto* fam = std::get_if<BettiFamily>(&v.payload)) {
    os << "{";
    bool first = true;
    for (const auto& [deg, curve] : fam->by_degree) {
      if (!first) os << "; ";
      first = false;
      os << "deg" << deg << " " << step_str(curve);
    }
    os << "}";
  } else if (const auto* s = std::get_if<StepFunction>(&v.payload)) {
    os << step_str(*s);
  } else if (const auto* vs = std::get_if<VertexSummary>(&v.payload)) {
    os << "{lowest=[";
    for (std::size_t i = 0; i < vs->lowest.size(); ++i) {
      if (i) os << ", ";
      os << vec_str(vs->lowest[i]);
    }
    os << "], vertices=" << vs->vertex_count << "}";
  } else if (const auto* l = std::get_if<long>(&v.payload)) {
    os << *l;
  } else if (const auto* b = std::get_if<bool>(&v.payload)) {
    os << (*b ? "true" : "false");
  }
  return os.str();
}

}  // namespace fdesc
