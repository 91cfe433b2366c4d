#include "fdesc/persistence.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdesc/linalg.hpp"

namespace fdesc {

Pairing reduce_boundary(const SimplicialComplex& k, const IndexFilter& order) {
  const std::size_t n = k.simplices.size();
  if (order.size() != n) {
    throw std::invalid_argument("index filter length does not match simplex count");
  }
  std::vector<int> position(n, -1);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = static_cast<int>(p);

  // Column p holds the facet positions of the simplex at position p.
  std::vector<BitRow> column(n);
  for (std::size_t p = 0; p < n; ++p) {
    BitRow col = bit_make(n);
    const Simplex& sigma = k.simplices[order[p]];
    for (const Simplex& face : facets(sigma)) {
      int idx = k.index_of(face);
      if (idx < 0) throw std::invalid_argument("complex is not closed under faces");
      bit_set(col, position[idx]);
    }
    column[p] = std::move(col);
  }

  // Standard left-to-right reduction: repeatedly cancel the lowest set row
  // against the earlier column owning that pivot.
  std::vector<int> owner(n, -1);  // pivot row -> column
  Pairing out;
  std::vector<char> paired(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    int low = bit_highest(column[p]);
    while (low >= 0 && owner[low] >= 0) {
      bit_xor(column[p], column[owner[low]]);
      low = bit_highest(column[p]);
    }
    if (low >= 0) {
      owner[low] = static_cast<int>(p);
      out.pairs.emplace_back(low, static_cast<int>(p));
      paired[low] = 1;
      paired[p] = 1;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!paired[p]) out.essentials.push_back(static_cast<int>(p));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<SimplexSign> simplex_signs(const Pairing& pairing, std::size_t n) {
  std::vector<SimplexSign> signs(n, SimplexSign::Positive);
  for (const auto& [birth, death] : pairing.pairs) {
    if (birth < 0 || death < 0 || static_cast<std::size_t>(death) >= n) {
      throw std::invalid_argument("pairing position out of range");
    }
    signs[death] = SimplexSign::Negative;
  }
  return signs;
}

namespace {

// Columns of the degree-k boundary matrix restricted to the simplices
// present in `mask`, expressed over rows indexed by the (k-1)-simplices of
// the full complex.  No reindexing: absent simplices contribute nothing.
std::vector<BitRow> masked_boundary_columns(const SimplicialComplex& k, int degree,
                                            const std::vector<char>& mask) {
  const std::size_t n = k.simplices.size();
  std::vector<BitRow> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i] || k.simplices[i].dim() != degree) continue;
    BitRow col = bit_make(n);
    for (const Simplex& face : facets(k.simplices[i])) {
      int idx = k.index_of(face);
      if (idx < 0) throw std::invalid_argument("complex is not closed under faces");
      bit_set(col, static_cast<std::size_t>(idx));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

std::size_t gf2_rank_of(std::vector<BitRow> cols, std::size_t nrows) {
  return gf2_reduce_columns(std::move(cols), nrows).rank;
}

// Basis of the degree-k cycle space of the sublevel complex at height t,
// as bit-columns over the full simplex index set.
std::vector<BitRow> cycle_basis(const SimplicialComplex& k, const FilterAssignment& f,
                                const Rat& t, int degree) {
  const std::size_t n = k.simplices.size();
  const std::vector<char> mask = sublevel_mask(f, t);
  // Columns of the boundary map from degree-k simplices in the sublevel set.
  std::vector<int> col_simplex;  // column -> simplex index
  std::vector<BitRow> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i] || k.simplices[i].dim() != degree) continue;
    BitRow col = bit_make(n);
    if (degree > 0) {
      for (const Simplex& face : facets(k.simplices[i])) {
        int idx = k.index_of(face);
        if (idx < 0) throw std::invalid_argument("complex is not closed under faces");
        bit_set(col, static_cast<std::size_t>(idx));
      }
    }
    col_simplex.push_back(static_cast<int>(i));
    cols.push_back(std::move(col));
  }
  const GF2Reduction red = gf2_reduce_columns(cols, n);
  std::vector<BitRow> basis;
  basis.reserve(red.kernel_combos.size());
  for (const std::vector<int>& combo : red.kernel_combos) {
    BitRow z = bit_make(n);
    for (int c : combo) bit_set(z, static_cast<std::size_t>(col_simplex[c]));
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace

long persistent_betti(const SimplicialComplex& k, const FilterAssignment& f, const Rat& i,
                      const Rat& j, int degree) {
  if (i > j) throw std::invalid_argument("persistence requires i <= j");
  if (degree < 0) return 0;
  const std::size_t n = k.simplices.size();
  const std::vector<char> mask_j = sublevel_mask(f, j);

  // rank of H_degree(F_i) -> H_degree(F_j) equals
  //   dim(Z_degree(F_i)) - dim(Z_degree(F_i) ∩ B_degree(F_j))
  // and the intersection dimension is rank[B | Z] - rank[B].
  const std::vector<BitRow> z_i = cycle_basis(k, f, i, degree);
  std::vector<BitRow> boundary_j = masked_boundary_columns(k, degree + 1, mask_j);

  const std::size_t rank_b = gf2_rank_of(boundary_j, n);
  std::vector<BitRow> joint = boundary_j;
  joint.insert(joint.end(), z_i.begin(), z_i.end());
  const std::size_t rank_joint = gf2_rank_of(std::move(joint), n);

  const std::size_t dim_zi = z_i.size();
  const std::size_t meet = dim_zi - (rank_joint - rank_b);
  return static_cast<long>(dim_zi - meet);
}

long sublevel_betti(const SimplicialComplex& k, const FilterAssignment& f, const Rat& t,
                    int degree) {
  return persistent_betti(k, f, t, t, degree);
}

}  // namespace fdesc
