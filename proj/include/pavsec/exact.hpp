#pragma once

#include "pavsec/pattern.hpp"
#include "pavsec/rational.hpp"
#include "pavsec/samplers.hpp"
#include "pavsec/strategy.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pavsec {

// Arrival-order distribution of the n items.
struct Distribution {
  enum class Kind { uniform, avoiding, low };

  Kind kind = Kind::uniform;
  Pattern pattern = Pattern::p231;  // meaningful only for Kind::avoiding
  LowCompletion completion = LowCompletion::increasing;

  static Distribution uniform_order() { return {}; }
  static Distribution avoiding(Pattern eta) { return {Kind::avoiding, eta, {}}; }
  static Distribution low(LowCompletion c = LowCompletion::increasing) {
    return {Kind::low, Pattern::p231, c};
  }

  // "uniform", "av231" .. "av321", "low".
  std::string name() const;
  static Distribution parse(std::string_view text);
};

// Exact success probability of the cutoff strategy: the average of
// run_strategy over the whole support. Guards: n <= 10 for uniform and
// avoiding (factorial enumeration); n <= 1e6 for low (n permutations).
Rational exact_success(int n, const Distribution& dist, int cutoff);

// All cutoffs 0..n-1 in one pass over the support.
std::vector<Rational> exact_success_sweep(int n, const Distribution& dist);

// Known closed forms, n >= 3:
//   231/132 -> C_{n-1}/C_n for every cutoff
//   123     -> C_{n-1}/C_n at cutoff 0 and 1 - C_{n-1}/C_n at cutoff 1
//   213     -> C_{n-1}/C_n at cutoffs 0 and 1
// Everything else has no closed form here and returns nullopt.
std::optional<Rational> closed_form(int n, Pattern eta, int cutoff);

// Double sum sum_{j>m} sum_{i<=m} C_{n-j} C_{i-1} C_{j-1-i} / C_n; equals
// C_{n-1}/C_n for every m in 1..n-1.
Rational d_value(int n, int m);

// Success probability under the low distribution: 1/n for every cutoff.
Rational low_success(int n, int cutoff);

// Exact success probability at cutoff n-2 for the 312 and 321 classes:
// (2 C_{n-1} - C_{n-2}) / C_n, a lower bound for the optimal cutoff. n >= 3.
Rational lower_bound_312_321(int n);

// P(best item arrives at position j), j = 1..n. Closed product formula for
// the 231 and 132 classes (n <= 1000), enumeration otherwise (n <= 10).
std::vector<Rational> max_position_law(int n, Pattern eta);

struct IndicatorLaw {
  int n = 0;
  std::vector<Rational> joint;      // 2^n entries; bit k-1 of the index is I_k
  std::vector<Rational> marginals;  // P(I_k = 1), k = 1..n
  bool independent = false;         // joint factorizes over all cells
};

// Law of the record indicators (I_1, ..., I_n) under dist; n <= 10.
IndicatorLaw indicator_joint_law(int n, const Distribution& dist);

// One result row shared by the CLI outputs.
struct SuccessRow {
  std::string dist;
  int n = 0;
  int m = 0;
  std::optional<Rational> exact;
  std::optional<double> estimate;
  std::optional<double> std_error;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string source;  // closed-form | enumeration | monte-carlo | bound
};

}  // namespace pavsec
