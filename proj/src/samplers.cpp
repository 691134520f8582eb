#include "pavsec/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pavsec {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("sampler: requires n >= 1");
}

}  // namespace

Permutation sample_uniform(int n, RandomSource& rng) {
  check_n(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = v.size() - 1; i > 0; --i) {
    const std::size_t j = rng.next_below(i + 1);
    std::swap(v[i], v[j]);
  }
  return Permutation::trusted(std::move(v));
}

DyckPath sample_dyck(int n, RandomSource& rng) {
  check_n(n);
  const std::size_t total = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<std::int8_t> w(total, -1);
  std::fill(w.begin(), w.begin() + n, std::int8_t{1});
  for (std::size_t i = total - 1; i > 0; --i) {
    const std::size_t j = rng.next_below(i + 1);
    std::swap(w[i], w[j]);
  }
  // First position of the minimal prefix sum; the rotation starting right
  // after it is the unique one with nonnegative proper prefixes, and the
  // step it ends on (into the minimum) is a down step.
  int sum = 0;
  int min_sum = 1;
  std::size_t min_at = 0;
  for (std::size_t i = 0; i < total; ++i) {
    sum += w[i];
    if (sum < min_sum) {
      min_sum = sum;
      min_at = i;
    }
  }
  DyckPath path;
  path.steps.resize(total - 1);
  for (std::size_t k = 0; k + 1 < total; ++k) {
    path.steps[k] = w[(min_at + 1 + k) % total];
  }
  return path;
}

Permutation dyck_to_231(const DyckPath& path) {
  if (!path.valid()) throw std::invalid_argument("dyck_to_231: malformed path");
  const int n = path.semilength();
  if (n == 0) throw std::invalid_argument("dyck_to_231: empty path");
  std::vector<int> out(static_cast<std::size_t>(n));
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  int next_position = 0;
  int next_value = 1;
  for (std::int8_t s : path.steps) {
    if (s == 1) {
      stack.push_back(next_position++);
    } else {
      out[static_cast<std::size_t>(stack.back())] = next_value++;
      stack.pop_back();
    }
  }
  return Permutation::trusted(std::move(out));
}

Permutation sample_avoiding(int n, Pattern eta, RandomSource& rng) {
  check_n(n);
  switch (eta) {
    case Pattern::p231: return dyck_to_231(sample_dyck(n, rng));
    case Pattern::p132: return reverse(dyck_to_231(sample_dyck(n, rng)));
    case Pattern::p213: return complement(dyck_to_231(sample_dyck(n, rng)));
    case Pattern::p312: return reverse(complement(dyck_to_231(sample_dyck(n, rng))));
    case Pattern::p321: return dyck_to_321(sample_dyck(n, rng));
    case Pattern::p123: return complement(dyck_to_321(sample_dyck(n, rng)));
  }
  throw std::logic_error("sample_avoiding: bad Pattern");
}

Permutation low_permutation(int n, int j, LowCompletion completion) {
  check_n(n);
  if (j < 1 || j > n) {
    throw std::invalid_argument("low_permutation: position of the best item must be in 1..n");
  }
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < j; ++i) v.push_back(i);
  v.push_back(n);
  if (completion == LowCompletion::increasing) {
    for (int x = j; x <= n - 1; ++x) v.push_back(x);
  } else {
    for (int x = n - 1; x >= j; --x) v.push_back(x);
  }
  return Permutation::trusted(std::move(v));
}

Permutation sample_low(int n, RandomSource& rng, LowCompletion completion) {
  check_n(n);
  const int j = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  return low_permutation(n, j, completion);
}

}  // namespace pavsec
