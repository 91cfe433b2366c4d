#include "fdesc/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fdesc {

namespace {

/* Row echelon form in place. Returns pivot columns in order. */
std::vector<std::size_t> echelon(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(Mat m) { return echelon(m).size(); }

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  if (rows == 0) return Vec{};
  const std::size_t cols = a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const auto pivots = echelon(a);
  // Inconsistent iff some pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
  return x;
}

std::vector<Vec> kernel_basis(Mat a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const auto pivots = echelon(a);
  std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_set.count(c)) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  Mat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return mat_rank(std::move(diffs));
}

bool affinely_independent(const std::vector<Vec>& points) {
  return points.empty() || affine_rank(points) == points.size() - 1;
}

BitRow bit_make(std::size_t nbits) { return BitRow((nbits + 63) / 64, 0); }

void bit_set(BitRow& r, std::size_t i) { r[i / 64] ^= (std::uint64_t(1) << (i % 64)); }

bool bit_get(const BitRow& r, std::size_t i) {
  return (r[i / 64] >> (i % 64)) & 1;
}

void bit_xor(BitRow& a, const BitRow& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

bool bit_zero(const BitRow& r) {
  for (auto w : r) {
    if (w) return false;
  }
  return true;
}

int bit_highest(const BitRow& r) {
  for (std::size_t w = r.size(); w-- > 0;) {
    if (r[w]) return int(w * 64 + 63 - __builtin_clzll(r[w]));
  }
  return -1;
}

GF2Reduction gf2_reduce_columns(std::vector<BitRow> columns, std::size_t nrows) {
  GF2Reduction out;
  const std::size_t n = columns.size();
  std::vector<int> pivot_owner(nrows, -1);
  // combos[j] tracks which original columns sum into working column j.
  std::vector<BitRow> combos(n, bit_make(n == 0 ? 1 : n));
  for (std::size_t j = 0; j < n; ++j) {
    bit_set(combos[j], j);
    int low = bit_highest(columns[j]);
    while (low >= 0 && pivot_owner[low] >= 0) {
      bit_xor(columns[j], columns[pivot_owner[low]]);
      bit_xor(combos[j], combos[pivot_owner[low]]);
      low = bit_highest(columns[j]);
    }
    if (low < 0) {
      std::vector<int> combo;
      for (std::size_t c = 0; c < n; ++c) {
        if (bit_get(combos[j], c)) combo.push_back(int(c));
      }
      out.kernel_combos.push_back(std::move(combo));
    } else {
      pivot_owner[low] = int(j);
      ++out.rank;
    }
  }
  return out;
}

}  // namespace fdesc
