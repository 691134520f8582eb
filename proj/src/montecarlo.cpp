#include "pavsec/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace pavsec {

namespace {

Permutation draw(int n, const Distribution& dist, RandomSource& rng) {
  switch (dist.kind) {
    case Distribution::Kind::uniform: return sample_uniform(n, rng);
    case Distribution::Kind::avoiding: return sample_avoiding(n, dist.pattern, rng);
    case Distribution::Kind::low: return sample_low(n, rng, dist.completion);
  }
  throw std::logic_error("draw: bad Distribution kind");
}

std::uint64_t count_successes(int n, const Distribution& dist, int cutoff,
                              std::uint64_t first, std::uint64_t last,
                              std::uint64_t seed) {
  std::uint64_t successes = 0;
  for (std::uint64_t t = first; t < last; ++t) {
    RandomSource rng(fold_seed(seed, t));
    if (run_strategy(draw(n, dist, rng), cutoff).success) ++successes;
  }
  return successes;
}

}  // namespace

Estimate estimate(int n, const Distribution& dist, int cutoff, std::uint64_t trials,
                  std::uint64_t seed, unsigned workers) {
  if (n < 1) throw std::invalid_argument("estimate: requires n >= 1");
  if (cutoff < 0 || cutoff > n - 1) {
    throw std::invalid_argument("estimate: cutoff must be in 0..n-1");
  }
  if (trials == 0) throw std::invalid_argument("estimate: requires trials >= 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers > trials) workers = static_cast<unsigned>(trials);

  std::uint64_t successes = 0;
  if (workers == 1) {
    successes = count_successes(n, dist, cutoff, 0, trials, seed);
  } else {
    // Contiguous trial ranges; the split cannot change the sum.
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = trials / workers;
    const std::uint64_t extra = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      pool.emplace_back([&, w, begin, end] {
        partial[w] = count_successes(n, dist, cutoff, begin, end, seed);
      });
      begin = end;
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t s : partial) successes += s;
  }

  Estimate est;
  est.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  est.trials = trials;
  est.seed = seed;
  return est;
}

std::vector<Estimate> sweep(int n, const Distribution& dist, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers) {
  if (n < 1) throw std::invalid_argument("sweep: requires n >= 1");
  std::vector<Estimate> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    rows.push_back(estimate(n, dist, m, trials,
                            fold_seed(seed, static_cast<std::uint64_t>(m)), workers));
  }
  return rows;
}

}  // namespace pavsec
