#pragma once

#include <functional>
#include <vector>

#include "fdesc/descriptors.hpp"

namespace fdesc {

/* Descriptor-to-descriptor transforms. Each acts on descriptor values only
 * (never on the complex) and commutes with direct computation:
 * apply(compute(from, k, s)) == compute(to, k, s) for every direction s. */
struct Reduction {
  DescriptorKind from;
  DescriptorKind to;
  const char* name;
  std::function<DescriptorValue(const DescriptorValue&)> apply;
};

/* Drop diagonal points of a verbose diagram. */
DescriptorValue verbose_to_concise_diagram(const DescriptorValue& apd);
/* Per degree, Betti value = positive count - negative count. */
DescriptorValue signed_counts_to_betti(const DescriptorValue& abc);
/* Euler value = even count - odd count. */
DescriptorValue parity_counts_to_euler(const DescriptorValue& aecc);
/* Betti value at t = points born by t and not yet dead. */
DescriptorValue diagram_to_betti(const DescriptorValue& pd);
/* Euler value = alternating sum of Betti values. */
DescriptorValue betti_to_euler(const DescriptorValue& bc);
/* Positive count at t = degree-k births <= t; negative = finite deaths <= t. */
DescriptorValue verbose_diagram_to_signed_counts(const DescriptorValue& apd);
/* Parity counts: a simplex of even dimension j is a degree-j creator or a
 * degree-(j-1) destroyer, so even(t) sums those columns; odd(t) the rest. */
DescriptorValue signed_counts_to_parity_counts(const DescriptorValue& abc);

/* The transform edges of the descriptor family, fixed order. */
const std::vector<Reduction>& reductions();

/* Check the commuting square on one complex over the given directions. */
bool verify_reduction(const Reduction& r, const SimplicialComplex& k,
                      const std::vector<Direction>& directions);

}  // namespace fdesc
