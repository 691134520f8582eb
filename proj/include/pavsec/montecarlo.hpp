#pragma once

#include "pavsec/exact.hpp"

#include <cstdint>
#include <vector>

namespace pavsec {

struct Estimate {
  double p_hat = 0.0;
  double std_error = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo success frequency of the cutoff strategy. Trial t draws its
// randomness from fold_seed(seed, t), so the result is a pure function of
// (n, dist, cutoff, trials, seed) regardless of the worker count; workers
// only split the trial range. workers == 0 picks the hardware concurrency.
Estimate estimate(int n, const Distribution& dist, int cutoff, std::uint64_t trials,
                  std::uint64_t seed, unsigned workers = 0);

// One estimate per cutoff 0..n-1; row m runs with seed fold_seed(seed, m).
std::vector<Estimate> sweep(int n, const Distribution& dist, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers = 0);

}  // namespace pavsec
