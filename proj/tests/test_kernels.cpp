#include <doctest.h>

#include <omp.h>

#include <random>

#include "sumrank/volume_kernels.hpp"
#include "sumrank/volumes.hpp"

using namespace sumrank;

namespace {

std::vector<BigCount> random_block(std::mt19937_64& rng, int len) {
  std::vector<BigCount> block(len);
  for (auto& b : block) {
    b = static_cast<unsigned long>(rng() >> 20);
    b *= static_cast<unsigned long>(rng() >> 20);
  }
  return block;
}

}  // namespace

TEST_CASE("parallel convolution equals the serial reference") {
  std::mt19937_64 rng(5);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 40; ++trial) {
      const auto prev = random_block(rng, 1 + trial % 17);
      const auto block = random_block(rng, 1 + trial % 5);
      const std::size_t len = prev.size() + block.size() - 1 - trial % 3;
      std::vector<BigCount> a(len), b(len);
      kernels::convolve_serial(prev, block, a);
      kernels::convolve_parallel(prev, block, b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("block powers: serial, parallel and direct expansion agree") {
  std::mt19937_64 rng(9);
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (int ell = 1; ell <= 9; ++ell)
      for (int len = 1; len <= 4; ++len) {
        const auto block = random_block(rng, len);
        const int full = ell * (len - 1);
        for (int radius : {0, full / 2, full}) {
          const auto s = kernels::block_power_serial(block, ell, radius);
          const auto p = kernels::block_power_parallel(block, ell, radius);
          CHECK(s == p);
          REQUIRE(static_cast<int>(s.size()) == radius + 1);
          // repeated untruncated multiplication
          std::vector<BigCount> poly{1};
          for (int i = 0; i < ell; ++i) {
            std::vector<BigCount> next(poly.size() + block.size() - 1, 0);
            for (std::size_t a = 0; a < poly.size(); ++a)
              for (std::size_t b = 0; b < block.size(); ++b) next[a + b] += poly[a] * block[b];
            poly = std::move(next);
          }
          for (int t = 0; t <= radius; ++t) CHECK(s[t] == poly[t]);
        }
      }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("volume tables do not depend on the thread count") {
  const auto p = CodeParams::make(2, 16, 8, 64);
  omp_set_num_threads(1);
  const VolumeTable one(p);
  omp_set_num_threads(4);
  const VolumeTable four(p);
  for (int t = 0; t <= p.max_weight(); ++t) CHECK(one.sphere(t) == four.sphere(t));
  omp_set_num_threads(omp_get_num_procs());
}
