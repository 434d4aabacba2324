#pragma once

// Bounds on the probability that a random linear sum-rank code is MSRD,
// the dimension at which random codes almost reach the GV bound, and the
// smallest extension degree m for which a bound becomes non-trivial.

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "sumrank/combinatorics.hpp"
#include "sumrank/params.hpp"
#include "sumrank/volumes.hpp"

namespace sumrank {

struct ProbabilityBound {
  std::optional<double> lower;  ///< clamped to [0, 1]
  std::optional<double> upper;  ///< clamped to [0, 1]
  double raw_lower = 0;         ///< unclamped, may be negative
  /// log_q of the failure term subtracted from 1; raw_lower > 0 iff this is < 0.
  double failure_logq = 0;
};

/// 1 - k C(k+ell-1, ell-1) q^{eta k - m}, for a systematic generator with
/// uniform redundancy part.
ProbabilityBound msrd_prob_lb_A(std::int64_t q, int m, int eta, int ell, int k);

enum class UVariant {
  LemmaConsistent,  ///< exponent k(eta - k/ell) - m, matching the |U_{ell,k}| count bound
  AsPrinted,        ///< additionally subtracts ell/4 in the exponent
};

/// 1 - k C(k+ell-1, ell-1) q^{k(eta - k/ell) - m} gamma_q^ell (see UVariant).
ProbabilityBound msrd_prob_lb_U(std::int64_t q, int m, int eta, int ell, int k, UVariant variant = UVariant::LemmaConsistent);

/// Bounds for a code drawn uniformly from all k-dimensional subspaces.
/// Lower: union bound over the sum-rank ball with the sphere-size upper
/// bound plugged in. Upper: exact q^m-binomial count of codes meeting a
/// fixed coordinate subspace of dimension n-k, evaluated only while the
/// numbers stay below `upper_bit_budget` bits.
ProbabilityBound msrd_prob_bounds_BR(const CodeParams& params, int k, std::uint64_t upper_bit_budget = std::uint64_t{1} << 20);

/// sum_{h >= h_start}^{D} [D,h]_Q sum_{s=h}^{D} [D-h,s-h]_Q [n-s,n-k]_Q (-1)^{s-h} Q^{C(s-h,2)}, D = n-k.
/// With h_start = 1 this counts k-subspaces of F_Q^n meeting a fixed
/// (n-k)-dimensional subspace nontrivially; with h_start = 0 it is [n,k]_Q.
BigCount br_alternating_sum(const BigCount& big_q, int n, int k, int h_start);

/// 1 - br_alternating_sum(q^m, n, k, 1) / [n,k]_{q^m}, exactly.
mpq_class br_upper_exact(const CodeParams& params, int k);

enum class BoundKind { A, ULemma, UPrinted, BRLower };

/// Smallest m >= 1 for which the chosen bound is defined and its raw lower
/// value is positive; nullopt if none up to m_cap. Requires ell | n.
std::optional<int> min_extension_degree(std::int64_t q, int n, int k, int ell, BoundKind kind, int m_cap = 1 << 22);

struct GvAttainment {
  double epsilon = 0;
  double epsilon_max = 0;
  int k = 0;
};

/// Right end of the admissible epsilon interval, 1 - log_q(Vol_B(d-1))/(mn) - 1/n.
double gv_attainment_epsilon_max(const VolumeTable& table, int d);

/// k = floor(n (1 - log_q(Vol_B(d-1))/(mn) - epsilon)) for epsilon in (0, epsilon_max].
/// Codes of this dimension reach distance d with probability 1 - exp(-Omega(mn));
/// no constant is available, so none is reported.
GvAttainment gv_attainment_dimension(const VolumeTable& table, int d, double epsilon);

}  // namespace sumrank
