#include "pavsec/exact.hpp"

#include "pavsec/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pavsec {

std::string Distribution::name() const {
  switch (kind) {
    case Kind::uniform: return "uniform";
    case Kind::avoiding: return "av" + to_string(pattern);
    case Kind::low: return "low";
  }
  throw std::logic_error("Distribution::name: bad kind");
}

Distribution Distribution::parse(std::string_view text) {
  if (text == "uniform") return uniform_order();
  if (text == "low") return low();
  if (text.size() == 5 && text.substr(0, 2) == "av") {
    return avoiding(pattern_from_string(text.substr(2)));
  }
  throw std::invalid_argument("Distribution: unknown name \"" + std::string(text) + "\"");
}

namespace {

void check_cutoff(int n, int cutoff) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  if (cutoff < 0 || cutoff > n - 1) {
    throw std::invalid_argument("cutoff must be in 0..n-1");
  }
}

// Runs visit(p) for every permutation in the support, in some fixed order.
// Returns the support size.
template <typename Visit>
std::uint64_t for_each_in_support(int n, const Distribution& dist, Visit visit) {
  switch (dist.kind) {
    case Distribution::Kind::uniform: {
      if (n < 1 || n > 10) {
        throw std::out_of_range("uniform enumeration is guarded to n <= 10");
      }
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 1);
      std::uint64_t total = 0;
      do {
        visit(Permutation::trusted(v));
        ++total;
      } while (std::next_permutation(v.begin(), v.end()));
      return total;
    }
    case Distribution::Kind::avoiding: {
      if (n < 1 || n > 10) {
        throw std::out_of_range("avoidance enumeration is guarded to n <= 10");
      }
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 1);
      std::uint64_t total = 0;
      do {
        Permutation p = Permutation::trusted(v);
        if (!contains(p, dist.pattern)) {
          visit(std::move(p));
          ++total;
        }
      } while (std::next_permutation(v.begin(), v.end()));
      return total;
    }
    case Distribution::Kind::low: {
      if (n < 1 || n > 1'000'000) {
        throw std::out_of_range("low support is guarded to n <= 1e6");
      }
      for (int j = 1; j <= n; ++j) visit(low_permutation(n, j, dist.completion));
      return static_cast<std::uint64_t>(n);
    }
  }
  throw std::logic_error("bad Distribution kind");
}

}  // namespace

Rational exact_success(int n, const Distribution& dist, int cutoff) {
  check_cutoff(n, cutoff);
  std::uint64_t successes = 0;
  const std::uint64_t total = for_each_in_support(n, dist, [&](const Permutation& p) {
    if (run_strategy(p, cutoff).success) ++successes;
  });
  return Rational(BigInt(successes), BigInt(total));
}

std::vector<Rational> exact_success_sweep(int n, const Distribution& dist) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  std::vector<std::uint64_t> successes(static_cast<std::size_t>(n), 0);
  const std::uint64_t total = for_each_in_support(n, dist, [&](const Permutation& p) {
    for (int m = 0; m < n; ++m) {
      if (run_strategy(p, m).success) ++successes[static_cast<std::size_t>(m)];
    }
  });
  std::vector<Rational> out;
  out.reserve(successes.size());
  for (std::uint64_t s : successes) out.emplace_back(BigInt(s), BigInt(total));
  return out;
}

std::optional<Rational> closed_form(int n, Pattern eta, int cutoff) {
  if (n < 3) throw std::invalid_argument("closed_form: requires n >= 3");
  check_cutoff(n, cutoff);
  const unsigned un = static_cast<unsigned>(n);
  switch (eta) {
    case Pattern::p231:
    case Pattern::p132:
      return catalan_ratio(un);
    case Pattern::p123:
      if (cutoff == 0) return catalan_ratio(un);
      if (cutoff == 1) return Rational(1) - catalan_ratio(un);
      return std::nullopt;
    case Pattern::p213:
      if (cutoff <= 1) return catalan_ratio(un);
      return std::nullopt;
    case Pattern::p312:
    case Pattern::p321:
      return std::nullopt;
  }
  throw std::logic_error("closed_form: bad Pattern");
}

Rational d_value(int n, int m) {
  if (n < 2) throw std::invalid_argument("d_value: requires n >= 2");
  if (m < 1 || m > n - 1) throw std::invalid_argument("d_value: m must be in 1..n-1");
  const BigInt cn = catalan(static_cast<unsigned>(n));
  Rational sum;
  for (int j = m + 1; j <= n; ++j) {
    BigInt inner = 0;
    for (int i = 1; i <= m; ++i) {
      inner += catalan(static_cast<unsigned>(i - 1)) *
               catalan(static_cast<unsigned>(j - 1 - i));
    }
    sum += Rational(catalan(static_cast<unsigned>(n - j)) * inner, cn);
  }
  return sum;
}

Rational low_success(int n, int cutoff) {
  check_cutoff(n, cutoff);
  return Rational(1, n);
}

Rational lower_bound_312_321(int n) {
  if (n < 3) throw std::invalid_argument("lower_bound_312_321: requires n >= 3");
  // (2 C_{n-1} - C_{n-2}) / C_n rewritten through successive ratios, which
  // stays cheap for n up to 1e6.
  const Rational r_n = catalan_ratio(static_cast<unsigned>(n));
  const Rational r_prev = catalan_ratio(static_cast<unsigned>(n - 1));
  return r_n * (Rational(2) - r_prev);
}

std::vector<Rational> max_position_law(int n, Pattern eta) {
  if (n < 1) throw std::invalid_argument("max_position_law: requires n >= 1");
  std::vector<Rational> law(static_cast<std::size_t>(n));
  if (eta == Pattern::p231 || eta == Pattern::p132) {
    if (n > 1000) {
      throw std::out_of_range("max_position_law: closed product guarded to n <= 1000");
    }
    const BigInt cn = catalan(static_cast<unsigned>(n));
    for (int j = 1; j <= n; ++j) {
      BigInt num = catalan(static_cast<unsigned>(j - 1)) *
                   catalan(static_cast<unsigned>(n - j));
      law[static_cast<std::size_t>(j - 1)] = Rational(std::move(num), cn);
    }
    // 132-avoiders share the law by the reverse symmetry... it is symmetric
    // in j anyway since C_{j-1} C_{n-j} = C_{(n+1-j)-1} C_{n-(n+1-j)}.
    return law;
  }
  if (n > 10) {
    throw std::out_of_range("max_position_law: enumeration guarded to n <= 10");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  const std::uint64_t total =
      for_each_in_support(n, Distribution::avoiding(eta), [&](const Permutation& p) {
        for (int i = 0; i < n; ++i) {
          if (p[i] == n) {
            ++counts[static_cast<std::size_t>(i)];
            break;
          }
        }
      });
  for (int j = 0; j < n; ++j) {
    law[static_cast<std::size_t>(j)] =
        Rational(BigInt(counts[static_cast<std::size_t>(j)]), BigInt(total));
  }
  return law;
}

IndicatorLaw indicator_joint_law(int n, const Distribution& dist) {
  if (n < 1 || n > 10) {
    throw std::out_of_range("indicator_joint_law: guarded to n <= 10");
  }
  std::vector<std::uint64_t> cells(std::size_t{1} << n, 0);
  const std::uint64_t total = for_each_in_support(n, dist, [&](const Permutation& p) {
    const std::vector<bool> rec = record_indicators(p);
    std::size_t mask = 0;
    for (int k = 0; k < n; ++k) {
      if (rec[static_cast<std::size_t>(k)]) mask |= std::size_t{1} << k;
    }
    ++cells[mask];
  });
  IndicatorLaw law;
  law.n = n;
  law.joint.reserve(cells.size());
  for (std::uint64_t c : cells) law.joint.emplace_back(BigInt(c), BigInt(total));
  law.marginals.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t mask = 0; mask < cells.size(); ++mask) {
    for (int k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) {
        law.marginals[static_cast<std::size_t>(k)] += law.joint[mask];
      }
    }
  }
  law.independent = true;
  for (std::size_t mask = 0; mask < cells.size() && law.independent; ++mask) {
    Rational product(1);
    for (int k = 0; k < n; ++k) {
      const Rational& m = law.marginals[static_cast<std::size_t>(k)];
      product *= (mask & (std::size_t{1} << k)) ? m : Rational(1) - m;
    }
    if (product != law.joint[mask]) law.independent = false;
  }
  return law;
}

}  // namespace pavsec
