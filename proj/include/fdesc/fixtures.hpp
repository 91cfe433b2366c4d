#pragma once

#include "fdesc/complex.hpp"

namespace fdesc {

/* Reference complexes. Every fixture passes validate() with an empty report. */

/* Edge between (1,1) and (1,2) in the plane. */
SimplicialComplex single_edge();

/* Four unit-square corners v0=(0,0) v1=(0,1) v2=(1,0) v3=(1,1);
 * square_a has edges {v0,v3},{v1,v3}; square_b has edges {v1,v3},{v1,v2}.
 * Both share the top edge {v1,v3} and hang one diagonal off it, so every
 * simplex height multiset agrees along all four signed axis directions:
 * the pair is indistinguishable by signed Betti counts there but separable
 * by verbose diagrams along (1,0). */
SimplicialComplex square_a();
SimplicialComplex square_b();

/* Worked four-vertex graph: vertices (0,0),(1,2),(2,0),(3,1) (x-heights
 * 0,1,2,3), edges {v1,v2} and {v0,v3},{v1,v3},{v2,v3}. Along +x it exhibits
 * an instantaneous pair, a finite merge, and one essential cycle. */
SimplicialComplex fan_graph();

/* n1 pairwise disjoint edges in R^d whose direction vectors are the first
 * n1 coordinate axes, base points spread on a moment curve so the 2*n1
 * vertices keep general position. Requires d > 2 and 1 <= n1 < d-1. */
SimplicialComplex sparse_graph(int d, int n1);

/* Clothespin: four plane points a,b,c,d with edges {a,b} and {c,d}, where c
 * is strictly interior to the triangle a b d and no other vertex lies in
 * the hull of the remaining three. Throws std::invalid_argument when the
 * points violate that shape or general position. Vertex order in the
 * result: a,b,c,d = indices 0..3. */
SimplicialComplex build_clothespin(const Vec& a, const Vec& b, const Vec& c, const Vec& d);

/* A concrete clothespin with a small wedge angle at its interior vertex,
 * usable as a clothesline motif. */
SimplicialComplex standard_clothespin();

/* m translated clothespins (vertices 4i..4i+3 belong to motif i) whose
 * whole-motif direction regions are certified pairwise disjoint with exact
 * arithmetic; wedge angles shrink until certification succeeds. 4m vertices,
 * 2m edges. */
SimplicialComplex build_clothesline(int m);

/* Per-motif adversary: motif i's edges rewired from {a,b},{c,d} to
 * {a,d},{b,c} (the swap a whole-motif region detects). */
SimplicialComplex clothesline_edge_swap(const SimplicialComplex& clothesline, int motif);

}  // namespace fdesc
