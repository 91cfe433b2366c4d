#include "fdesc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdesc/linalg.hpp"

namespace fdesc {

std::vector<HalfSpace> simplex_envelope(const SimplicialComplex& k, const Simplex& sigma,
                                        const std::vector<Direction>& dirs) {
  if (!k.has(sigma)) throw std::invalid_argument("envelope simplex is not in the complex");
  if (dirs.empty()) throw std::invalid_argument("envelope needs at least one direction");
  std::vector<HalfSpace> out;
  out.reserve(dirs.size());
  for (const Direction& s : dirs) {
    require_direction(s, k.ambient_dim);
    Rat low = dot(s, k.vertices[sigma.v.front()]);
    for (std::size_t i = 1; i < sigma.v.size(); ++i) {
      Rat h = dot(s, k.vertices[sigma.v[i]]);
      if (h < low) low = h;
    }
    out.push_back(HalfSpace{s, low});
  }
  return out;
}

namespace {

/* Two-phase primal simplex on the tableau, exact rational arithmetic,
 * Bland's rule (smallest index) for entering and leaving variables, which
 * rules out cycling. Free variables are split x = u - w with u, w >= 0;
 * each >= constraint gets a surplus column. */
class SimplexTableau {
 public:
  SimplexTableau(const std::vector<HalfSpace>& constraints, int dim)
      : d_(dim),
        m_(static_cast<int>(constraints.size())),
        ncols_(2 * dim + m_ + m_),
        rows_(constraints.size()),
        basis_(constraints.size()) {
    for (int i = 0; i < m_; ++i) {
      const HalfSpace& h = constraints[i];
      Vec row(ncols_ + 1, rat_of(0));
      for (int j = 0; j < d_; ++j) {
        row[j] = h.normal[j];
        row[d_ + j] = -h.normal[j];
      }
      row[2 * d_ + i] = rat_of(-1);  // surplus
      row[ncols_] = h.offset;
      if (rat_sign(row[ncols_]) < 0) {
        for (Rat& v : row) v = -v;
      }
      row[art_col(i)] = rat_of(1);
      rows_[i] = std::move(row);
      basis_[i] = art_col(i);
    }
  }

  int art_col(int i) const { return 2 * d_ + m_ + i; }
  bool is_artificial(int col) const { return col >= 2 * d_ + m_; }

  /* Returns false when the feasible region is empty. */
  bool phase_one() {
    Vec cost(ncols_, rat_of(0));
    for (int i = 0; i < m_; ++i) cost[art_col(i)] = rat_of(-1);
    optimize(cost, /*allow_artificial=*/true);
    Rat value = objective_value(cost);
    if (rat_sign(value) != 0) return false;
    evict_artificials();
    return true;
  }

  /* Maximizes c.(u - w); true on bounded optimum, false when unbounded. */
  bool phase_two(const Vec& objective, Rat& value_out) {
    Vec cost(ncols_, rat_of(0));
    for (int j = 0; j < d_; ++j) {
      cost[j] = objective[j];
      cost[d_ + j] = -objective[j];
    }
    if (!optimize(cost, /*allow_artificial=*/false)) return false;
    value_out = objective_value(cost);
    return true;
  }

 private:
  Rat objective_value(const Vec& cost) const {
    Rat v = rat_of(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      v += cost[basis_[i]] * rows_[i][ncols_];
    }
    return v;
  }

  void pivot(int row, int col) {
    Rat p = rows_[row][col];
    for (Rat& v : rows_[row]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rat f = rows_[i][col];
      if (rat_sign(f) == 0) continue;
      for (int j = 0; j <= ncols_; ++j) {
        rows_[i][j] -= f * rows_[row][j];
      }
    }
    basis_[row] = col;
  }

  /* Reduced cost of a column under the given cost vector. */
  Rat reduced_cost(const Vec& cost, int col) const {
    Rat z = cost[col];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rat_sign(rows_[i][col]) == 0) continue;
      z -= cost[basis_[i]] * rows_[i][col];
    }
    return z;
  }

  /* Bland pivoting to optimality; false when the objective is unbounded. */
  bool optimize(const Vec& cost, bool allow_artificial) {
    for (;;) {
      int entering = -1;
      for (int col = 0; col < ncols_; ++col) {
        if (!allow_artificial && is_artificial(col)) continue;
        if (rat_sign(reduced_cost(cost, col)) > 0) {
          entering = col;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rat best_ratio = rat_of(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rat_sign(rows_[i][entering]) <= 0) continue;
        Rat ratio = rows_[i][ncols_] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  /* After a zero-value phase one, pivot leftover artificial variables out
   * of the basis; rows that cannot pivot are redundant and get dropped. */
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < 2 * d_ + m_; ++j) {
        if (rat_sign(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(static_cast<int>(i), col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  int d_;
  int m_;
  int ncols_;
  std::vector<Vec> rows_;
  std::vector<int> basis_;
};

}  // namespace

LpResult lp_maximize(const std::vector<HalfSpace>& constraints, const Vec& objective) {
  const int d = static_cast<int>(objective.size());
  if (d == 0) throw std::invalid_argument("linear program needs variables");
  for (const HalfSpace& h : constraints) {
    if (static_cast<int>(h.normal.size()) != d) {
      throw std::invalid_argument("halfspace dimension mismatch");
    }
  }
  if (constraints.empty()) {
    if (is_zero_vec(objective)) return LpResult{LpStatus::Optimal, rat_of(0)};
    return LpResult{LpStatus::Unbounded, rat_of(0)};
  }
  SimplexTableau t(constraints, d);
  if (!t.phase_one()) return LpResult{LpStatus::Infeasible, rat_of(0)};
  Rat value;
  if (!t.phase_two(objective, value)) return LpResult{LpStatus::Unbounded, rat_of(0)};
  return LpResult{LpStatus::Optimal, value};
}

int polyhedron_dimension(const std::vector<HalfSpace>& halves, int ambient_dim) {
  if (halves.empty()) {
    throw std::invalid_argument("polyhedron dimension needs at least one halfspace");
  }
  for (const HalfSpace& h : halves) {
    if (static_cast<int>(h.normal.size()) != ambient_dim) {
      throw std::invalid_argument("halfspace dimension mismatch");
    }
  }
  {
    const Vec zero(ambient_dim, rat_of(0));
    if (lp_maximize(halves, zero).status == LpStatus::Infeasible) {
      throw std::domain_error("halfspace intersection is empty");
    }
  }
  // A constraint is an implicit equality when its normal cannot exceed its
  // offset anywhere in the polyhedron; the dimension is the ambient
  // dimension minus the rank of those equality normals.
  Mat equalities;
  for (const HalfSpace& h : halves) {
    const LpResult r = lp_maximize(halves, h.normal);
    if (r.status == LpStatus::Optimal && r.value == h.offset) {
      equalities.push_back(h.normal);
    }
  }
  if (equalities.empty()) return ambient_dim;
  return ambient_dim - static_cast<int>(mat_rank(equalities));
}

bool direction_perpendicular_to_simplex(const SimplicialComplex& k, const Simplex& sigma,
                                        const Direction& s) {
  if (!k.has(sigma)) throw std::invalid_argument("simplex is not in the complex");
  require_direction(s, k.ambient_dim);
  const Rat first = dot(s, k.vertices[sigma.v.front()]);
  for (std::size_t i = 1; i < sigma.v.size(); ++i) {
    if (dot(s, k.vertices[sigma.v[i]]) != first) return false;
  }
  return true;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (const Simplex& sigma : k.simplices) {
    bool maximal = true;
    for (const Simplex& tau : k.simplices) {
      if (sigma.v.size() < tau.v.size() && is_face_of(sigma, tau)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(sigma);
  }
  return out;
}

ConciseConditionsReport check_concise_conditions(const SimplicialComplex& k,
                                                 const std::vector<Direction>& dirs) {
  for (const Direction& s : dirs) require_direction(s, k.ambient_dim);
  const int d = k.ambient_dim;
  ConciseConditionsReport report;
  report.size_ok = static_cast<int>(dirs.size()) >= d + 1;

  bool perp_ok_all = true;
  bool indep_ok_all = true;
  bool env_ok_all = true;
  for (const Simplex& sigma : maximal_simplices(k)) {
    if (sigma.dim() >= d) continue;
    SimplexConditionReport row;
    row.simplex = sigma;

    std::vector<Direction> perp;
    for (const Direction& s : dirs) {
      if (direction_perpendicular_to_simplex(k, sigma, s)) perp.push_back(s);
    }
    row.perpendicular_count = static_cast<long>(perp.size());
    row.perpendicular_count_ok = row.perpendicular_count >= d - sigma.dim() + 1;

    row.pairwise_independent_ok = true;
    if (sigma.dim() < d - 1) {
      for (std::size_t i = 0; i < perp.size() && row.pairwise_independent_ok; ++i) {
        for (std::size_t j = i + 1; j < perp.size(); ++j) {
          if (parallel(perp[i], perp[j])) {
            row.pairwise_independent_ok = false;
            break;
          }
        }
      }
    }

    row.envelope_dim = polyhedron_dimension(simplex_envelope(k, sigma, dirs), d);
    row.envelope_dim_ok = row.envelope_dim == sigma.dim();

    perp_ok_all = perp_ok_all && row.perpendicular_count_ok;
    indep_ok_all = indep_ok_all && row.pairwise_independent_ok;
    env_ok_all = env_ok_all && row.envelope_dim_ok;
    report.per_simplex.push_back(std::move(row));
  }

  report.count_conditions_ok = report.size_ok && perp_ok_all && indep_ok_all;
  report.envelope_dims_ok = env_ok_all;
  report.verdict = report.count_conditions_ok && report.envelope_dims_ok;
  return report;
}

}  // namespace fdesc
