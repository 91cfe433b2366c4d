#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdesc/descriptors.hpp"

namespace fdesc {

/* Finite universe of adversary complexes sharing one ambient dimension.
 * Faithfulness here is always relative to such a universe; the reference
 * complex is a member. */
struct AdversaryUniverse {
  std::vector<SimplicialComplex> complexes;
  bool enumerated = false;  // provenance: enumeration vs explicit list
  int reference_index = -1;
};

/* Universe = every subcomplex on exactly K's vertex set up to max_dim. */
AdversaryUniverse universe_on_vertex_set(const SimplicialComplex& k, int max_dim,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

/* Universe from an explicit list; K is inserted when absent; duplicates
 * (as immersed complexes) are removed. */
AdversaryUniverse universe_from_list(const SimplicialComplex& k,
                                     std::vector<SimplicialComplex> list);

/* Universe = all complexes over general-position subsets of a point pool. */
AdversaryUniverse universe_on_point_pool(const SimplicialComplex& k, const std::vector<Vec>& pool,
                                         int max_dim, std::size_t max_vertices,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

struct FaithfulnessReport {
  bool faithful = false;
  /* Universe indices of adversaries no parameter separates from K. */
  std::vector<int> indistinguishable;
  /* For each separated adversary, the first separating parameter. */
  std::map<int, Vec> separating_parameter;
};

/* P (parameter list) is faithful for descriptor `kind` at K relative to U
 * iff every universe member that differs from K (as an immersed complex) is
 * separated by at least one parameter. */
FaithfulnessReport relative_faithful(DescriptorKind kind, const SimplicialComplex& k,
                                     const std::vector<Vec>& params, const AdversaryUniverse& u);

/* First candidate (in order) whose descriptor values at K and L differ. */
std::optional<Vec> distinguishing_parameter(DescriptorKind kind, const SimplicialComplex& k,
                                            const SimplicialComplex& l,
                                            const std::vector<Vec>& candidates);

/* Stock direction pool for K's ambient dimension: the signed axis directions
 * ±e_i, every diagonal (±1, ..., ±1), and for each pair of distinct vertices
 * a direction perpendicular to their difference (both signs), scaled to
 * integer coordinates. Duplicate rays are dropped; order is deterministic. */
std::vector<Vec> default_candidate_pool(const SimplicialComplex& k);

/* Grow P0 to a faithful set: every adversary with K's vertex point set that
 * P0 misses gets one separating candidate appended. Requires P0 to already
 * separate every adversary on a different vertex set; throws
 * std::invalid_argument otherwise, and std::runtime_error (naming the
 * adversary) when no candidate separates some remaining adversary. */
std::vector<Vec> augment_to_faithful(DescriptorKind kind, const SimplicialComplex& k,
                                     const std::vector<Vec>& p0,
                                     const std::vector<Vec>& candidates,
                                     const AdversaryUniverse& u);

/* Symbolic cardinality: a natural number, or one of the ordered symbols
 * countable < uncountable < top (= "no faithful set exists"). */
struct CardinalityBound {
  enum class Tag { Finite, Countable, Uncountable, Top } tag = Tag::Finite;
  long finite_value = 0;

  static CardinalityBound finite(long v) { return {Tag::Finite, v}; }
  static CardinalityBound countable() { return {Tag::Countable, 0}; }
  static CardinalityBound uncountable() { return {Tag::Uncountable, 0}; }
  static CardinalityBound top() { return {Tag::Top, 0}; }
  bool operator==(const CardinalityBound&) const = default;
};
bool bound_less(const CardinalityBound& a, const CardinalityBound& b);
std::string bound_str(const CardinalityBound& b);

struct MinFaithfulResult {
  CardinalityBound size;              // Top when no candidate subset works
  std::optional<std::vector<Vec>> witness;  // first minimal faithful subset
  std::uint64_t subsets_tested = 0;
};

/* Exhaustive search over candidate subsets by increasing cardinality, then
 * lexicographic candidate order; stops at the first faithful subset.
 * Throws std::length_error when more than `budget` subsets would be
 * tested. */
MinFaithfulResult min_faithful_size(DescriptorKind kind, const SimplicialComplex& k,
                                    const std::vector<Vec>& candidates,
                                    const AdversaryUniverse& u,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/* Evidence table for a claimed strength relation "A weaker-or-equal B"
 * (faithful-for-B never needs more than faithful-for-A). Each instance
 * reports the two relative minimal sizes; the instance is flagged when the
 * required inequality size_A >= size_B fails at the relative level. */
struct StrengthInstance {
  const SimplicialComplex* k;
  const std::vector<Vec>* candidates;
  const AdversaryUniverse* universe;
};
struct StrengthEvidenceRow {
  CardinalityBound size_weaker;
  CardinalityBound size_stronger;
  bool contradicts_claim = false;
};
std::vector<StrengthEvidenceRow> strength_evidence(DescriptorKind weaker, DescriptorKind stronger,
                                                   const std::vector<StrengthInstance>& instances,
                                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fdesc
