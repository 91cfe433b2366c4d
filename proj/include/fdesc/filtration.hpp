#pragma once

#include <vector>

#include "fdesc/complex.hpp"

namespace fdesc {

/* Direction in R^d: any nonzero rational vector; two vectors describe the
 * same direction when one is a positive multiple of the other. */
using Direction = Vec;

void require_direction(const Direction& s, int ambient_dim);

/* Heights of all simplices under one filter, aligned with k.simplices. */
struct FilterAssignment {
  std::vector<Rat> value;
};

/* Lower-star filter: the height of a simplex is the maximum height s.v of
 * its vertices. Monotone under the face relation by construction. */
FilterAssignment lower_star(const SimplicialComplex& k, const Direction& s);

bool filter_monotone(const SimplicialComplex& k, const FilterAssignment& f);

/* Total order on the simplices refining a filter: position -> simplex
 * index. Faces come before cofaces and strictly lower heights come first. */
using IndexFilter = std::vector<int>;

/* Tie rule: priority per simplex used to order equal-height simplices
 * (smaller priority first, subject to faces-first). An empty priority list
 * selects the default rule: dimension, then lexicographic vertex list. */
struct TieRule {
  std::vector<int> priority;
};

IndexFilter index_filter(const SimplicialComplex& k, const FilterAssignment& f,
                         const TieRule& tie = {});

bool compatible_index_filter(const SimplicialComplex& k, const FilterAssignment& f,
                             const IndexFilter& order);

/* Sorted distinct heights taken by the filter. */
std::vector<Rat> critical_heights(const FilterAssignment& f);

/* Inclusion mask of the sublevel set {sigma : f(sigma) <= t}. */
std::vector<char> sublevel_mask(const FilterAssignment& f, const Rat& t);

/* The sublevel set as a standalone complex (vertices reindexed densely). */
SimplicialComplex sublevel(const SimplicialComplex& k, const FilterAssignment& f, const Rat& t);

}  // namespace fdesc
