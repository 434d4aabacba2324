#include "sumrank/volume_kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumrank::kernels {

namespace {

void convolve_one(std::span<const BigCount> prev, std::span<const BigCount> block, BigCount& acc, long t) {
  acc = 0;
  const long s_lo = std::max(0L, t - static_cast<long>(prev.size()) + 1);
  const long s_hi = std::min(t, static_cast<long>(block.size()) - 1);
  for (long s = s_lo; s <= s_hi; ++s) mpz_addmul(acc.get_mpz_t(), prev[t - s].get_mpz_t(), block[s].get_mpz_t());
}

template <class Convolve>
std::vector<BigCount> block_power(std::span<const BigCount> block, int ell, int radius_max, Convolve convolve) {
  if (ell < 0 || radius_max < 0) throw std::invalid_argument("block_power: negative argument");
  if (block.empty()) throw std::invalid_argument("block_power: empty block");
  const long block_deg = static_cast<long>(block.size()) - 1;
  std::vector<BigCount> cur{BigCount(1)};
  std::vector<BigCount> next;
  for (int j = 1; j <= ell; ++j) {
    const long len = std::min<long>(radius_max, j * block_deg) + 1;
    next.assign(len, BigCount(0));
    convolve(std::span<const BigCount>(cur), block, std::span<BigCount>(next));
    cur.swap(next);
  }
  cur.resize(radius_max + 1, BigCount(0));
  return cur;
}

}  // namespace

void convolve_serial(std::span<const BigCount> prev, std::span<const BigCount> block, std::span<BigCount> out) {
  for (std::size_t t = 0; t < out.size(); ++t) convolve_one(prev, block, out[t], static_cast<long>(t));
}

void convolve_parallel(std::span<const BigCount> prev, std::span<const BigCount> block, std::span<BigCount> out) {
  const long len = static_cast<long>(out.size());
  // Cost per t grows with the operand sizes, so hand out small chunks.
#pragma omp parallel for schedule(dynamic, 4)
  for (long t = 0; t < len; ++t) convolve_one(prev, block, out[t], t);
}

std::vector<BigCount> block_power_serial(std::span<const BigCount> block, int ell, int radius_max) {
  return block_power(block, ell, radius_max, convolve_serial);
}

std::vector<BigCount> block_power_parallel(std::span<const BigCount> block, int ell, int radius_max) {
  return block_power(block, ell, radius_max, convolve_parallel);
}

}  // namespace sumrank::kernels
