#include "fdesc/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fdesc {

namespace {

const Diagram& require_diagram(const DescriptorValue& v, DescriptorKind kind) {
  if (v.kind != kind || !std::holds_alternative<Diagram>(v.payload)) {
    throw std::invalid_argument("reduction input has the wrong descriptor kind");
  }
  return std::get<Diagram>(v.payload);
}

const BettiFamily& require_family(const DescriptorValue& v, DescriptorKind kind) {
  if (v.kind != kind || !std::holds_alternative<BettiFamily>(v.payload)) {
    throw std::invalid_argument("reduction input has the wrong descriptor kind");
  }
  return std::get<BettiFamily>(v.payload);
}

const StepFunction& require_step(const DescriptorValue& v, DescriptorKind kind) {
  if (v.kind != kind || !std::holds_alternative<StepFunction>(v.payload)) {
    throw std::invalid_argument("reduction input has the wrong descriptor kind");
  }
  return std::get<StepFunction>(v.payload);
}

// All event heights appearing anywhere in the family.
std::vector<Rat> family_heights(const BettiFamily& fam) {
  std::set<Rat> hs;
  for (const auto& [deg, curve] : fam.by_degree) {
    for (const auto& [h, v] : curve.events) hs.insert(h);
  }
  return std::vector<Rat>(hs.begin(), hs.end());
}

BettiFamily family_from_samples(
    bool verbose, int width,
    const std::map<int, std::vector<std::pair<Rat, std::vector<long>>>>& raw_by_degree) {
  BettiFamily fam;
  fam.verbose = verbose;
  for (const auto& [deg, raw] : raw_by_degree) {
    StepFunction curve = normalize_step(width, raw);
    if (!curve.events.empty()) fam.by_degree.emplace(deg, std::move(curve));
  }
  return fam;
}

}  // namespace

DescriptorValue verbose_to_concise_diagram(const DescriptorValue& apd) {
  const Diagram& in = require_diagram(apd, DescriptorKind::APD);
  Diagram out;
  out.verbose = false;
  for (const DiagramPoint& p : in.points) {
    if (p.death && *p.death == p.birth) continue;
    out.points.push_back(p);
  }
  normalize_diagram(out);
  return DescriptorValue{DescriptorKind::PD, std::move(out)};
}

DescriptorValue signed_counts_to_betti(const DescriptorValue& abc) {
  const BettiFamily& in = require_family(abc, DescriptorKind::ABC);
  std::map<int, std::vector<std::pair<Rat, std::vector<long>>>> raw;
  for (const auto& [deg, curve] : in.by_degree) {
    if (curve.width != 2) throw std::invalid_argument("signed count curves must have width 2");
    std::vector<std::pair<Rat, std::vector<long>>> samples;
    for (const auto& [h, v] : curve.events) {
      samples.emplace_back(h, std::vector<long>{v[0] - v[1]});
    }
    raw.emplace(deg, std::move(samples));
  }
  BettiFamily out = family_from_samples(false, 1, raw);
  return DescriptorValue{DescriptorKind::BC, std::move(out)};
}

DescriptorValue parity_counts_to_euler(const DescriptorValue& aecc) {
  const StepFunction& in = require_step(aecc, DescriptorKind::AECC);
  if (in.width != 2) throw std::invalid_argument("parity count curve must have width 2");
  std::vector<std::pair<Rat, std::vector<long>>> samples;
  for (const auto& [h, v] : in.events) {
    samples.emplace_back(h, std::vector<long>{v[0] - v[1]});
  }
  return DescriptorValue{DescriptorKind::ECC, normalize_step(1, std::move(samples))};
}

DescriptorValue diagram_to_betti(const DescriptorValue& pd) {
  const Diagram& in = require_diagram(pd, DescriptorKind::PD);
  // Betti value at t per degree: points born at or before t and still alive
  // (death strictly after t, or no death).
  std::map<int, std::set<Rat>> heights;
  for (const DiagramPoint& p : in.points) {
    heights[p.degree].insert(p.birth);
    if (p.death) heights[p.degree].insert(*p.death);
  }
  std::map<int, std::vector<std::pair<Rat, std::vector<long>>>> raw;
  for (const auto& [deg, hs] : heights) {
    std::vector<std::pair<Rat, std::vector<long>>> samples;
    for (const Rat& t : hs) {
      long alive = 0;
      for (const DiagramPoint& p : in.points) {
        if (p.degree != deg) continue;
        if (p.birth <= t && (!p.death || *p.death > t)) ++alive;
      }
      samples.emplace_back(t, std::vector<long>{alive});
    }
    raw.emplace(deg, std::move(samples));
  }
  BettiFamily out = family_from_samples(false, 1, raw);
  return DescriptorValue{DescriptorKind::BC, std::move(out)};
}

DescriptorValue betti_to_euler(const DescriptorValue& bc) {
  const BettiFamily& in = require_family(bc, DescriptorKind::BC);
  std::vector<std::pair<Rat, std::vector<long>>> samples;
  for (const Rat& t : family_heights(in)) {
    long chi = 0;
    for (const auto& [deg, curve] : in.by_degree) {
      const long beta = step_value_at(curve, t)[0];
      chi += (deg % 2 == 0) ? beta : -beta;
    }
    samples.emplace_back(t, std::vector<long>{chi});
  }
  return DescriptorValue{DescriptorKind::ECC, normalize_step(1, std::move(samples))};
}

DescriptorValue verbose_diagram_to_signed_counts(const DescriptorValue& apd) {
  const Diagram& in = require_diagram(apd, DescriptorKind::APD);
  // Every degree-k point records a positive simplex of dimension k at its
  // birth; a finite death records a negative simplex of dimension k+1,
  // which the degree-k pair counts as a destroyer.
  std::map<int, std::map<Rat, std::pair<long, long>>> delta;
  for (const DiagramPoint& p : in.points) {
    ++delta[p.degree][p.birth].first;
    if (p.death) ++delta[p.degree][*p.death].second;
  }
  std::map<int, std::vector<std::pair<Rat, std::vector<long>>>> raw;
  for (const auto& [deg, by_height] : delta) {
    std::vector<std::pair<Rat, std::vector<long>>> samples;
    long cum_pos = 0;
    long cum_neg = 0;
    for (const auto& [h, d] : by_height) {
      cum_pos += d.first;
      cum_neg += d.second;
      samples.emplace_back(h, std::vector<long>{cum_pos, cum_neg});
    }
    raw.emplace(deg, std::move(samples));
  }
  BettiFamily out = family_from_samples(true, 2, raw);
  return DescriptorValue{DescriptorKind::ABC, std::move(out)};
}

DescriptorValue signed_counts_to_parity_counts(const DescriptorValue& abc) {
  const BettiFamily& in = require_family(abc, DescriptorKind::ABC);
  // A simplex of dimension j is either a degree-j creator (the positive
  // column of pair j) or a degree-(j-1) destroyer (the negative column of
  // pair j-1), so the even/odd totals sum those columns by parity of j.
  std::vector<std::pair<Rat, std::vector<long>>> samples;
  for (const Rat& t : family_heights(in)) {
    long even = 0;
    long odd = 0;
    for (const auto& [deg, curve] : in.by_degree) {
      const std::vector<long> v = step_value_at(curve, t);
      // v[0]: dimension-deg simplices; v[1]: dimension-(deg+1) simplices.
      if (deg % 2 == 0) {
        even += v[0];
        odd += v[1];
      } else {
        odd += v[0];
        even += v[1];
      }
    }
    samples.emplace_back(t, std::vector<long>{even, odd});
  }
  return DescriptorValue{DescriptorKind::AECC, normalize_step(2, std::move(samples))};
}

const std::vector<Reduction>& reductions() {
  static const std::vector<Reduction> table = {
      {DescriptorKind::APD, DescriptorKind::PD, "apd_to_pd", verbose_to_concise_diagram},
      {DescriptorKind::ABC, DescriptorKind::BC, "abc_to_bc", signed_counts_to_betti},
      {DescriptorKind::AECC, DescriptorKind::ECC, "aecc_to_ecc", parity_counts_to_euler},
      {DescriptorKind::PD, DescriptorKind::BC, "pd_to_bc", diagram_to_betti},
      {DescriptorKind::BC, DescriptorKind::ECC, "bc_to_ecc", betti_to_euler},
      {DescriptorKind::APD, DescriptorKind::ABC, "apd_to_abc", verbose_diagram_to_signed_counts},
      {DescriptorKind::ABC, DescriptorKind::AECC, "abc_to_aecc", signed_counts_to_parity_counts},
  };
  return table;
}

bool verify_reduction(const Reduction& r, const SimplicialComplex& k,
                      const std::vector<Direction>& directions) {
  for (const Direction& s : directions) {
    const DescriptorValue from = compute(k, r.from, s);
    const DescriptorValue reduced = r.apply(from);
    const DescriptorValue direct = compute(k, r.to, s);
    if (!equal(reduced, direct)) return false;
  }
  return true;
}

}  // namespace fdesc
