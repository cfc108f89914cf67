#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cubered/integrand.hpp"
#include "cubered/quadrature.hpp"
#include "cubered/rng.hpp"

namespace cubered {

namespace detail {

struct McBlock {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Fixed block size: results must be a function of (seed, samples, n, f)
// only, so the block layout can never depend on the thread count.
inline constexpr std::int64_t kMcBlockSize = 1 << 16;

/// Fixed-order pairwise reduction over per-block partials; the combining
/// tree depends only on the block count, never on which thread filled what.
inline McBlock mc_combine(const std::vector<McBlock>& blocks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return blocks[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  const McBlock left = mc_combine(blocks, lo, mid);
  const McBlock right = mc_combine(blocks, mid, hi);
  return {left.sum + right.sum, left.sum_sq + right.sum_sq};
}

}  // namespace detail

/// Plain Monte Carlo estimate of the cube integral of f(x_1 + ... + x_n).
/// Sampling is counter-based — coordinate j of sample i is a pure function
/// of (seed, i*n + j) — and accumulation is blocked with a fixed pairwise
/// combining order, so the result is bit-identical for any thread count.
/// error_estimate is the standard error of the mean.
inline NumericReport mc_cube(int n, const Integrand& f, std::int64_t samples, std::uint64_t seed,
                             int threads = 0) {
  if (n < 1) throw std::invalid_argument("mc_cube: n must be >= 1");
  if (samples < 2) throw std::invalid_argument("mc_cube: samples must be >= 2");

  const std::uint64_t stream = mix_u64(seed);  // decorrelates small seed values
  const std::int64_t block_count = (samples + detail::kMcBlockSize - 1) / detail::kMcBlockSize;
  std::vector<detail::McBlock> blocks(static_cast<std::size_t>(block_count));

  const auto fill_block = [&](std::int64_t b) {
    const std::int64_t begin = b * detail::kMcBlockSize;
    const std::int64_t end = std::min(samples, begin + detail::kMcBlockSize);
    detail::McBlock acc;
    for (std::int64_t i = begin; i < end; ++i) {
      double arg = 0.0;
      const std::uint64_t base = stream + static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n);
      for (int j = 0; j < n; ++j) arg += uniform_open01(base + static_cast<std::uint64_t>(j));
      const double value = f(arg);
      acc.sum += value;
      acc.sum_sq += value * value;
    }
    blocks[static_cast<std::size_t>(b)] = acc;
  };

  int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (worker_count < 1) worker_count = 1;
  worker_count = static_cast<int>(std::min<std::int64_t>(worker_count, block_count));

  if (worker_count == 1) {
    for (std::int64_t b = 0; b < block_count; ++b) fill_block(b);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        for (std::int64_t b = w; b < block_count; b += worker_count) fill_block(b);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  const detail::McBlock total = detail::mc_combine(blocks, 0, blocks.size());
  const double mean = total.sum / static_cast<double>(samples);
  double variance =
      (total.sum_sq - static_cast<double>(samples) * mean * mean) / static_cast<double>(samples - 1);
  if (variance < 0.0) variance = 0.0;  // rounding guard for constant integrands

  NumericReport report;
  report.value = mean;
  report.error_estimate = std::sqrt(variance / static_cast<double>(samples));
  report.method = "monte-carlo";
  report.effort = samples;
  report.seed = seed;
  return report;
}

}  // namespace cubered
