#include "sumrank/volumes.hpp"

#include <stdexcept>
#include <string>

#include "sumrank/volume_kernels.hpp"

namespace sumrank {

namespace {

void check_radius(const CodeParams& params, int t) {
  if (t < 0 || t > params.max_weight())
    throw std::invalid_argument("radius " + std::to_string(t) + " outside [0, " + std::to_string(params.max_weight()) + "]");
}

}  // namespace

std::vector<BigCount> block_rank_counts(const CodeParams& params) {
  std::vector<BigCount> counts(params.mu() + 1);
  for (int s = 0; s <= params.mu(); ++s) counts[s] = nm_count(params.eta, params.m, s, params.q);
  return counts;
}

VolumeTable::VolumeTable(const CodeParams& params, int radius_max) : params_(params) {
  check_radius(params, radius_max);
  const auto counts = block_rank_counts(params);
  sphere_ = kernels::block_power_parallel(counts, params.ell, radius_max);
  ball_.resize(sphere_.size());
  BigCount acc = 0;
  for (std::size_t t = 0; t < sphere_.size(); ++t) {
    acc += sphere_[t];
    ball_[t] = acc;
  }
}

const BigCount& VolumeTable::sphere(int t) const {
  if (t < 0 || t > radius_max()) throw std::invalid_argument("radius " + std::to_string(t) + " not in volume table");
  return sphere_[t];
}

const BigCount& VolumeTable::ball(int t) const {
  if (t < 0 || t > radius_max()) throw std::invalid_argument("radius " + std::to_string(t) + " not in volume table");
  return ball_[t];
}

double VolumeTable::ball_logq(int t) const { return logq(ball(t), static_cast<double>(params_.q)); }

BigCount sphere_volume(const CodeParams& params, int t) {
  check_radius(params, t);
  return VolumeTable(params, t).sphere(t);
}

BigCount sphere_volume_direct(const CodeParams& params, int t) {
  check_radius(params, t);
  const auto counts = block_rank_counts(params);
  BigCount total = 0;
  PartitionGenerator gen(t, params.ell, params.mu());
  while (auto parts = gen.next()) {
    BigCount prod = 1;
    for (int ti : *parts) prod *= counts[ti];
    total += prod;
  }
  return total;
}

BigCount ball_volume(const CodeParams& params, int t) {
  check_radius(params, t);
  return VolumeTable(params, t).ball(t);
}

double sphere_lower_bound_logq(const CodeParams& params, int t) {
  check_radius(params, t);
  if (t == 0) throw std::invalid_argument("sphere lower bound needs a positive radius");
  const double ell = params.ell;
  double bound = (params.m + params.eta - t / ell) * t - ell * log_gamma_q(params.q);
  if (t % params.ell != 0) bound -= ell / 4.0;
  return bound;
}

double sphere_upper_bound_logq(const CodeParams& params, int t) {
  check_radius(params, t);
  const double ell = params.ell;
  const double q = static_cast<double>(params.q);
  return logq(binomial(params.ell + t - 1, params.ell - 1), q) + ell * log_gamma_q(params.q) +
         t * (params.m + params.eta - t / ell);
}

}  // namespace sumrank
