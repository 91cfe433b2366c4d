#pragma once

#include <vector>

#include "fdesc/filtration.hpp"

namespace fdesc {

/* Closed halfspace {p : normal . p >= offset}. */
struct HalfSpace {
  Vec normal;
  Rat offset;
};

/* One halfspace per direction s in S: {p : s.p >= min height of sigma's
 * vertices under s}. The intersection always contains sigma. */
std::vector<HalfSpace> simplex_envelope(const SimplicialComplex& k, const Simplex& sigma,
                                        const std::vector<Direction>& dirs);

/* Dimension of a nonempty halfspace intersection: ambient dimension minus
 * the rank of the implicitly tight constraint normals (equivalently the
 * largest dimension of a contained ball). Exact; throws
 * std::invalid_argument on an empty halfspace list and std::domain_error
 * when the intersection is empty. */
int polyhedron_dimension(const std::vector<HalfSpace>& halves, int ambient_dim);

/* Linear program max c.x over {A x >= b}, exact rational simplex method. */
enum class LpStatus { Optimal, Unbounded, Infeasible };
struct LpResult {
  LpStatus status;
  Rat value;  // meaningful for Optimal
};
LpResult lp_maximize(const std::vector<HalfSpace>& constraints, const Vec& objective);

/* True when s.(u - w) = 0 for every vertex pair u,w of sigma (every
 * direction is perpendicular to a vertex). */
bool direction_perpendicular_to_simplex(const SimplicialComplex& k, const Simplex& sigma,
                                        const Direction& s);

/* Necessary conditions a direction set must satisfy for a concise
 * descriptor set to stand a chance of being faithful. Per maximal simplex
 * sigma of dimension dim(sigma) < d: (a) the envelope over S has dimension
 * equal to dim(sigma); (b) S holds at least d - dim(sigma) + 1 directions
 * perpendicular to sigma; (c) when dim(sigma) < d-1 those perpendicular
 * directions are pairwise linearly independent. Globally: |S| >= d+1.
 * Failing any of these rules out faithfulness; passing proves nothing. */
struct SimplexConditionReport {
  Simplex simplex;
  int envelope_dim = -1;
  bool envelope_dim_ok = false;
  long perpendicular_count = 0;
  bool perpendicular_count_ok = false;
  bool pairwise_independent_ok = true;
};

struct ConciseConditionsReport {
  std::vector<SimplexConditionReport> per_simplex;
  bool size_ok = false;          // |S| >= d+1
  bool count_conditions_ok = false;   // (b) + (c) + size
  bool envelope_dims_ok = false;      // (a) for every checked simplex
  bool verdict = false;               // all of the above
};

ConciseConditionsReport check_concise_conditions(const SimplicialComplex& k,
                                                 const std::vector<Direction>& dirs);

/* Maximal simplices (not a proper face of any other simplex). */
std::vector<Simplex> maximal_simplices(const SimplicialComplex& k);

}  // namespace fdesc
