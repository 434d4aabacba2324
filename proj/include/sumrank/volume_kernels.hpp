#pragma once

// Block-convolution kernels behind the sphere-volume DP. The serial versions
// are the reference; the OpenMP versions must produce identical results.

#include <span>
#include <vector>

#include "sumrank/combinatorics.hpp"

namespace sumrank::kernels {

/// out[t] = sum_s prev[t - s] * block[s], for every t < out.size().
void convolve_serial(std::span<const BigCount> prev, std::span<const BigCount> block, std::span<BigCount> out);
void convolve_parallel(std::span<const BigCount> prev, std::span<const BigCount> block, std::span<BigCount> out);

/// Coefficients 0..radius_max of (sum_s block[s] x^s)^ell.
std::vector<BigCount> block_power_serial(std::span<const BigCount> block, int ell, int radius_max);
std::vector<BigCount> block_power_parallel(std::span<const BigCount> block, int ell, int radius_max);

}  // namespace sumrank::kernels
