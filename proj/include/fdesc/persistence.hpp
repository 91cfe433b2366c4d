#pragma once

#include <vector>

#include "fdesc/filtration.hpp"

namespace fdesc {

/* Result of boundary-matrix column reduction over Z/2 along an index
 * filter. Positions refer to filtration order (0-based); pairs are
 * (creator position, destroyer position); essentials are unpaired creator
 * positions. Every simplex appears in exactly one role. */
struct Pairing {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> essentials;
};

Pairing reduce_boundary(const SimplicialComplex& k, const IndexFilter& order);

enum class SimplexSign { Positive, Negative };

/* Sign per filtration position: creators (of degree = own dimension) are
 * positive, destroyers negative. */
std::vector<SimplexSign> simplex_signs(const Pairing& pairing, std::size_t n);

/* Rank of the map H_k(sublevel at i) -> H_k(sublevel at j) over Z/2,
 * computed from cycle/boundary spaces with Gaussian elimination - an
 * independent route that never consults the reduction pairing. Requires
 * i <= j. */
long persistent_betti(const SimplicialComplex& k, const FilterAssignment& f, const Rat& i,
                      const Rat& j, int degree);

/* Betti number of one sublevel set (same machinery, i == j). */
long sublevel_betti(const SimplicialComplex& k, const FilterAssignment& f, const Rat& t,
                    int degree);

}  // namespace fdesc
