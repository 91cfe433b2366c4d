#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdesc/rational.hpp"

namespace fdesc {

/* Dense exact-rational matrix utilities (row-major). Sizes here are tiny
 * (ambient dimension <= 8, a few dozen rows), so plain Gaussian elimination
 * with full fraction arithmetic is the right tool. */
using Mat = std::vector<Vec>;

std::size_t mat_rank(Mat m);

/* Solve A x = b exactly. Returns one solution if consistent (free variables
 * set to zero), nullopt if inconsistent. */
std::optional<Vec> solve_linear(Mat a, Vec b);

/* Basis of the null space {x : A x = 0}, x over the columns of A. */
std::vector<Vec> kernel_basis(Mat a);

/* Affine rank of a point set = linear rank of differences to the first
 * point. A set of k+1 points is affinely independent iff its affine rank
 * is k. */
std::size_t affine_rank(const std::vector<Vec>& points);
bool affinely_independent(const std::vector<Vec>& points);

/* GF(2) vectors as little-endian machine-word bitsets. */
using BitRow = std::vector<std::uint64_t>;

BitRow bit_make(std::size_t nbits);
void bit_set(BitRow& r, std::size_t i);
bool bit_get(const BitRow& r, std::size_t i);
void bit_xor(BitRow& a, const BitRow& b);
bool bit_zero(const BitRow& r);
int bit_highest(const BitRow& r);  // -1 when zero

/* Left-to-right column reduction over GF(2) (pivot = highest set row).
 * Yields the column rank plus, for every column that reduced to zero, the
 * sorted list of original column indices whose sum is zero (a kernel
 * element). This doubles as the engine for chain-group rank computations. */
struct GF2Reduction {
  std::size_t rank = 0;
  std::vector<std::vector<int>> kernel_combos;
};
GF2Reduction gf2_reduce_columns(std::vector<BitRow> columns, std::size_t nrows);

}  // namespace fdesc
