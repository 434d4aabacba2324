#pragma once

// Exact counting primitives: binomials, Gaussian binomials, rank-t matrix
// counts, bounded ordered partitions, and the constant gamma_q.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace sumrank {

using BigCount = mpz_class;

/// log_q(x) for x > 0, accurate for arbitrarily large x.
double logq(const BigCount& x, double q);

/// q^e as a BigCount.
BigCount power(std::int64_t q, std::int64_t e);
BigCount power(const BigCount& q, std::int64_t e);

/// C(n, k); 0 when k < 0 or k > n (also for negative n).
BigCount binomial(std::int64_t n, std::int64_t k);

/// Gaussian binomial [n choose k]_q; 0 outside 0 <= k <= n.
BigCount q_binomial(std::int64_t n, std::int64_t k, std::int64_t q);
BigCount q_binomial(std::int64_t n, std::int64_t k, const BigCount& q);

/// Number of m x n matrices over F_q of rank t; 0 when t > min(n, m).
BigCount nm_count(std::int64_t n, std::int64_t m, std::int64_t t, std::int64_t q);

/// Lower bound (m + n - t) t - log_q(gamma_q) on log_q NM_q(n, m, t).
double nm_lower_bound_logq(std::int64_t n, std::int64_t m, std::int64_t t, std::int64_t q);

/// Number of (t_1..t_ell) with 0 <= t_i <= mu summing to t, by
/// inclusion-exclusion over the summands that exceed mu.
BigCount partition_count(std::int64_t t, std::int64_t ell, std::int64_t mu);

using PartitionVec = std::vector<int>;

/// Yields every bounded ordered partition of t into ell parts (each in
/// [0, mu]) exactly once, in lexicographic order.
class PartitionGenerator {
 public:
  PartitionGenerator(int t, int ell, int mu);
  std::optional<PartitionVec> next();

 private:
  bool advance();

  int t_, ell_, mu_;
  PartitionVec current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<PartitionVec> all_partitions(int t, int ell, int mu);

struct GammaQ {
  std::int64_t q;
  double value;
  int truncation_terms;
  /// Relative truncation error bound exp(q^{-terms} q/(q-1)) - 1.
  double truncation_error;
};

/// gamma_q = prod_{i>=1} (1 - q^{-i})^{-1}, truncated after `terms` factors.
GammaQ gamma_q(std::int64_t q, int terms = 64);

/// log_q(gamma_q) with the default truncation.
double log_gamma_q(std::int64_t q);

}  // namespace sumrank
