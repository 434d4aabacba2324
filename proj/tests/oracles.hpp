#pragma once

// Brute-force reference computations shared by the tests. They avoid
// Gaussian elimination and the DP so that agreement means something.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sumrank/fields.hpp"
#include "sumrank/params.hpp"

namespace oracle {

using sumrank::Field;

/// Rank of a list of vectors over F_q as log_q of the size of their span,
/// found by enumerating every linear combination.
inline int span_rank(const Field& f, const std::vector<std::vector<Field::Element>>& vecs) {
  if (vecs.empty()) return 0;
  const std::size_t dim = vecs.front().size();
  const std::uint64_t q = f.order();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < vecs.size(); ++i) combos *= q;
  std::set<std::vector<Field::Element>> span;
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<Field::Element> acc(dim, 0);
    std::uint64_t rest = idx;
    for (const auto& v : vecs) {
      const auto a = static_cast<Field::Element>(rest % q);
      rest /= q;
      for (std::size_t j = 0; j < dim; ++j) acc[j] = f.add(acc[j], f.mul(a, v[j]));
    }
    span.insert(std::move(acc));
  }
  int r = 0;
  for (std::size_t size = 1; size < span.size(); size *= q) ++r;
  return r;
}

/// Rank by fraction-free elimination (row_o <- pivot * row_o - a * row_p),
/// so no inverses are needed. Written separately from the library's row
/// reduction.
inline int elimination_rank(const Field& f, std::vector<std::vector<Field::Element>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const auto pivot = rows[rank][c];
    for (std::size_t o = rank + 1; o < rows.size(); ++o) {
      const auto a = rows[o][c];
      if (a == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[o][j] = f.sub(f.mul(pivot, rows[o][j]), f.mul(a, rows[rank][j]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Number of vectors of F_{q^m}^n with each sum-rank weight, by visiting
/// all q^{mn} of them. Block ranks come from span_rank of the coordinate
/// columns.
inline std::vector<std::uint64_t> weight_histogram(const sumrank::CodeParams& p) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(p.q));
  const int digits = p.m * p.n();
  std::uint64_t total = 1;
  for (int i = 0; i < digits; ++i) total *= static_cast<std::uint64_t>(p.q);
  std::vector<std::uint64_t> hist(p.max_weight() + 1, 0);
  std::vector<Field::Element> x(digits);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < digits; ++i) {
      x[i] = static_cast<Field::Element>(rest % p.q);
      rest /= p.q;
    }
    int w = 0;
    for (int b = 0; b < p.ell; ++b) {
      std::vector<std::vector<Field::Element>> cols;
      for (int j = 0; j < p.eta; ++j) {
        const int coord = b * p.eta + j;
        cols.emplace_back(x.begin() + coord * p.m, x.begin() + (coord + 1) * p.m);
      }
      w += span_rank(f, cols);
    }
    ++hist[w];
  }
  return hist;
}

/// Same histogram for larger spaces: an odometer over the digits with each
/// block's rank (elimination_rank) cached until that block changes.
inline std::vector<std::uint64_t> weight_histogram_fast(const sumrank::CodeParams& p) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(p.q));
  const auto q = static_cast<Field::Element>(p.q);
  const int block_digits = p.m * p.eta;
  std::vector<Field::Element> x(static_cast<std::size_t>(block_digits) * p.ell, 0);
  std::vector<int> block_rank(p.ell, 0);
  std::vector<std::uint64_t> hist(p.max_weight() + 1, 0);
  auto rank_of = [&](int b) {
    if (p.eta == 1) {
      // a single column has rank 1 iff it is nonzero
      const auto start = x.begin() + static_cast<std::ptrdiff_t>(b) * p.m;
      return std::any_of(start, start + p.m, [](Field::Element v) { return v != 0; }) ? 1 : 0;
    }
    std::vector<std::vector<Field::Element>> cols;
    for (int j = 0; j < p.eta; ++j) {
      const auto start = x.begin() + (static_cast<std::ptrdiff_t>(b) * p.eta + j) * p.m;
      cols.emplace_back(start, start + p.m);
    }
    return elimination_rank(f, std::move(cols));
  };
  int total = 0;
  while (true) {
    ++hist[total];
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] == q) x[pos++] = 0;
    if (pos == x.size()) break;
    // blocks 0..pos/block_digits changed
    const int last = static_cast<int>(pos) / block_digits;
    for (int b = 0; b <= last; ++b) {
      total -= block_rank[b];
      block_rank[b] = rank_of(b);
      total += block_rank[b];
    }
  }
  return hist;
}

}  // namespace oracle
