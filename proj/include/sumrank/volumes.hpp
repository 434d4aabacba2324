#pragma once

// Sum-rank sphere and ball volumes in F_{q^m}^n.
//
// Vol_S(t) = sum over weight decompositions (t_1..t_ell) of prod_i NM_q(eta, m, t_i).
// The DP computes it as the ell-fold convolution of the per-block rank
// counts; the direct partition sum is kept as an independent oracle.

#include <vector>

#include "sumrank/combinatorics.hpp"
#include "sumrank/params.hpp"

namespace sumrank {

/// NM_q(eta, m, s) for s = 0..mu: number of vectors in F_{q^m}^eta of rank weight s.
std::vector<BigCount> block_rank_counts(const CodeParams& params);

/// Sphere and ball volumes for every radius 0..radius_max, computed in one pass.
class VolumeTable {
 public:
  VolumeTable(const CodeParams& params, int radius_max);
  /// Table up to the largest possible weight ell * mu.
  explicit VolumeTable(const CodeParams& params) : VolumeTable(params, params.max_weight()) {}

  const CodeParams& params() const { return params_; }
  int radius_max() const { return static_cast<int>(sphere_.size()) - 1; }

  const BigCount& sphere(int t) const;
  const BigCount& ball(int t) const;
  double ball_logq(int t) const;

 private:
  CodeParams params_;
  std::vector<BigCount> sphere_;
  std::vector<BigCount> ball_;
};

BigCount sphere_volume(const CodeParams& params, int t);
BigCount sphere_volume_direct(const CodeParams& params, int t);
BigCount ball_volume(const CodeParams& params, int t);

/// log_q lower bound (m + eta - t/ell) t - ell/4 - ell log_q(gamma_q) on
/// Vol_S(t), for 1 <= t <= ell mu. The ell/4 term is omitted when ell | t.
double sphere_lower_bound_logq(const CodeParams& params, int t);

/// log_q upper bound log_q C(ell+t-1, ell-1) + ell log_q(gamma_q) + t (m + eta - t/ell).
double sphere_upper_bound_logq(const CodeParams& params, int t);

}  // namespace sumrank
