#include "fdesc/faithfulness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fdesc {

namespace {

int find_member(const std::vector<SimplicialComplex>& list, const SimplicialComplex& k) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (complexes_equal(list[i], k)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

AdversaryUniverse universe_on_vertex_set(const SimplicialComplex& k, int max_dim,
                                         std::uint64_t budget) {
  AdversaryUniverse u;
  u.complexes = enumerate_subcomplexes(k.ambient_dim, k.vertices, max_dim, budget);
  u.enumerated = true;
  u.reference_index = find_member(u.complexes, k);
  if (u.reference_index < 0) {
    throw std::invalid_argument(
        "reference complex is outside its own universe; raise the dimension cap");
  }
  return u;
}

AdversaryUniverse universe_from_list(const SimplicialComplex& k,
                                     std::vector<SimplicialComplex> list) {
  AdversaryUniverse u;
  for (SimplicialComplex& c : list) {
    if (c.ambient_dim != k.ambient_dim) {
      throw std::invalid_argument("universe members must share the ambient dimension");
    }
    if (find_member(u.complexes, c) < 0) u.complexes.push_back(std::move(c));
  }
  u.enumerated = false;
  u.reference_index = find_member(u.complexes, k);
  if (u.reference_index < 0) {
    u.reference_index = static_cast<int>(u.complexes.size());
    u.complexes.push_back(k);
  }
  return u;
}

AdversaryUniverse universe_on_point_pool(const SimplicialComplex& k, const std::vector<Vec>& pool,
                                         int max_dim, std::size_t max_vertices,
                                         std::uint64_t budget) {
  AdversaryUniverse u;
  u.complexes = enumerate_on_point_subsets(k.ambient_dim, pool, max_dim, max_vertices, budget);
  u.enumerated = true;
  u.reference_index = find_member(u.complexes, k);
  if (u.reference_index < 0) {
    u.reference_index = static_cast<int>(u.complexes.size());
    u.complexes.push_back(k);
  }
  return u;
}

FaithfulnessReport relative_faithful(DescriptorKind kind, const SimplicialComplex& k,
                                     const std::vector<Vec>& params,
                                     const AdversaryUniverse& u) {
  if (u.reference_index < 0 || u.reference_index >= static_cast<int>(u.complexes.size()) ||
      !complexes_equal(u.complexes[static_cast<std::size_t>(u.reference_index)], k)) {
    throw std::invalid_argument("reference complex is not a member of the universe");
  }
  FaithfulnessReport report;
  std::vector<DescriptorValue> reference;
  reference.reserve(params.size());
  for (const Vec& p : params) reference.push_back(compute(k, kind, p));

  for (std::size_t i = 0; i < u.complexes.size(); ++i) {
    const SimplicialComplex& adversary = u.complexes[i];
    if (static_cast<int>(i) == u.reference_index) continue;
    if (complexes_equal(adversary, k)) continue;
    bool separated = false;
    for (std::size_t j = 0; j < params.size(); ++j) {
      if (!equal(reference[j], compute(adversary, kind, params[j]))) {
        report.separating_parameter.emplace(static_cast<int>(i), params[j]);
        separated = true;
        break;
      }
    }
    if (!separated) report.indistinguishable.push_back(static_cast<int>(i));
  }
  report.faithful = report.indistinguishable.empty();
  return report;
}

std::optional<Vec> distinguishing_parameter(DescriptorKind kind, const SimplicialComplex& k,
                                            const SimplicialComplex& l,
                                            const std::vector<Vec>& candidates) {
  for (const Vec& p : candidates) {
    if (!equal(compute(k, kind, p), compute(l, kind, p))) return p;
  }
  return std::nullopt;
}

namespace {

/* Scale v so every coordinate is an integer (multiply by the lcm of the
 * denominators). Preserves the ray. */
Vec integerize(const Vec& v) {
  mpz_class multiplier = 1;
  for (const Rat& c : v) multiplier = lcm(multiplier, c.get_den());
  return scale(Rat(multiplier), v);
}

}  // namespace

std::vector<Vec> default_candidate_pool(const SimplicialComplex& k) {
  const int d = k.ambient_dim;
  std::vector<Vec> pool;
  auto push_unique = [&pool](Vec v) {
    if (is_zero_vec(v)) return;
    for (const Vec& u : pool) {
      if (same_ray(u, v)) return;
    }
    pool.push_back(std::move(v));
  };

  for (int i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      Vec e(static_cast<std::size_t>(d), Rat(0));
      e[static_cast<std::size_t>(i)] = Rat(sign);
      push_unique(std::move(e));
    }
  }

  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << d); ++bits) {
    Vec v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::size_t>(i)] = ((bits >> i) & 1) ? Rat(-1) : Rat(1);
    }
    push_unique(std::move(v));
  }

  for (std::size_t a = 0; a < k.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < k.vertices.size(); ++b) {
      Vec u = sub(k.vertices[b], k.vertices[a]);
      if (is_zero_vec(u)) continue;
      std::vector<Vec> perps;
      if (d == 2) {
        perps.push_back(Vec{-u[1], u[0]});
      } else {
        // Project each axis direction onto the hyperplane perpendicular to u.
        Rat uu = dot(u, u);
        for (int i = 0; i < d; ++i) {
          Vec e(static_cast<std::size_t>(d), Rat(0));
          e[static_cast<std::size_t>(i)] = Rat(1);
          Rat coefficient = dot(e, u) / uu;
          Vec p = sub(e, scale(coefficient, u));
          if (!is_zero_vec(p)) perps.push_back(std::move(p));
        }
      }
      for (const Vec& p : perps) {
        Vec q = integerize(p);
        push_unique(q);
        push_unique(scale(Rat(-1), q));
      }
    }
  }
  return pool;
}

namespace {

std::vector<Vec> sorted_points(const SimplicialComplex& k) {
  std::vector<Vec> pts = k.vertices;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  });
  return pts;
}

std::string describe_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    if (i) os << ", ";
    os << simplex_str(k.simplices[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<Vec> augment_to_faithful(DescriptorKind kind, const SimplicialComplex& k,
                                     const std::vector<Vec>& p0,
                                     const std::vector<Vec>& candidates,
                                     const AdversaryUniverse& u) {
  const std::vector<Vec> k_points = sorted_points(k);
  std::vector<Vec> params = p0;
  for (std::size_t i = 0; i < u.complexes.size(); ++i) {
    const SimplicialComplex& adversary = u.complexes[i];
    if (static_cast<int>(i) == u.reference_index) continue;
    if (complexes_equal(adversary, k)) continue;
    const bool same_vertex_set = sorted_points(adversary) == k_points;
    if (distinguishing_parameter(kind, k, adversary, params)) continue;
    if (!same_vertex_set) {
      throw std::invalid_argument(
          "starting parameters must already separate every adversary on a "
          "different vertex set; unresolved: " +
          describe_complex(adversary));
    }
    const auto fix = distinguishing_parameter(kind, k, adversary, candidates);
    if (!fix) {
      throw std::runtime_error("no candidate separates adversary " + describe_complex(adversary));
    }
    params.push_back(*fix);
  }
  return params;
}

bool bound_less(const CardinalityBound& a, const CardinalityBound& b) {
  auto ordinal = [](CardinalityBound::Tag t) {
    switch (t) {
      case CardinalityBound::Tag::Finite: return 0;
      case CardinalityBound::Tag::Countable: return 1;
      case CardinalityBound::Tag::Uncountable: return 2;
      case CardinalityBound::Tag::Top: return 3;
    }
    return 3;
  };
  if (a.tag != b.tag) return ordinal(a.tag) < ordinal(b.tag);
  if (a.tag == CardinalityBound::Tag::Finite) return a.finite_value < b.finite_value;
  return false;
}

std::string bound_str(const CardinalityBound& b) {
  switch (b.tag) {
    case CardinalityBound::Tag::Finite: return std::to_string(b.finite_value);
    case CardinalityBound::Tag::Countable: return "aleph0";
    case CardinalityBound::Tag::Uncountable: return "aleph1";
    case CardinalityBound::Tag::Top: return "alephTop";
  }
  return "alephTop";
}

MinFaithfulResult min_faithful_size(DescriptorKind kind, const SimplicialComplex& k,
                                    const std::vector<Vec>& candidates,
                                    const AdversaryUniverse& u, std::uint64_t budget) {
  const std::size_t n = candidates.size();
  if (n >= 63 || (std::uint64_t(1) << n) > budget) {
    throw std::length_error("subset search budget exceeded: 2^" + std::to_string(n) +
                            " candidate subsets");
  }

  // Precompute, per adversary, the bitmask of candidates that separate it
  // from the reference; a subset is faithful iff it meets every mask.
  std::vector<DescriptorValue> reference;
  reference.reserve(n);
  for (const Vec& p : candidates) reference.push_back(compute(k, kind, p));
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < u.complexes.size(); ++i) {
    const SimplicialComplex& adversary = u.complexes[i];
    if (static_cast<int>(i) == u.reference_index) continue;
    if (complexes_equal(adversary, k)) continue;
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!equal(reference[j], compute(adversary, kind, candidates[j]))) {
        mask |= std::uint64_t(1) << j;
      }
    }
    masks.push_back(mask);
  }

  MinFaithfulResult result;
  auto faithful_mask = [&](std::uint64_t subset) {
    for (std::uint64_t m : masks) {
      if ((m & subset) == 0) return false;
    }
    return true;
  };

  for (std::size_t size = 0; size <= n; ++size) {
    // Combinations of `size` candidate indices in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::uint64_t subset = 0;
      for (std::size_t i : idx) subset |= std::uint64_t(1) << i;
      ++result.subsets_tested;
      if (faithful_mask(subset)) {
        result.size = CardinalityBound::finite(static_cast<long>(size));
        std::vector<Vec> witness;
        for (std::size_t i : idx) witness.push_back(candidates[i]);
        result.witness = std::move(witness);
        return result;
      }
      if (size == 0) break;
      // Advance to the next combination in lexicographic order.
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[pos] == n - size + static_cast<std::size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < size; ++i) {
        idx[i] = idx[i - 1] + 1;
      }
    }
  }
  result.size = CardinalityBound::top();
  result.witness = std::nullopt;
  return result;
}

std::vector<StrengthEvidenceRow> strength_evidence(DescriptorKind weaker, DescriptorKind stronger,
                                                   const std::vector<StrengthInstance>& instances,
                                                   std::uint64_t budget) {
  std::vector<StrengthEvidenceRow> rows;
  rows.reserve(instances.size());
  for (const StrengthInstance& inst : instances) {
    StrengthEvidenceRow row;
    row.size_weaker =
        min_faithful_size(weaker, *inst.k, *inst.candidates, *inst.universe, budget).size;
    row.size_stronger =
        min_faithful_size(stronger, *inst.k, *inst.candidates, *inst.universe, budget).size;
    row.contradicts_claim = bound_less(row.size_weaker, row.size_stronger);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fdesc
