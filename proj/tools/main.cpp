// pavsec: exact and simulated success probabilities of cutoff strategies
// under pattern-avoiding and adversarial arrival orders.

#include "pavsec/catalan.hpp"
#include "pavsec/exact.hpp"
#include "pavsec/montecarlo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace pavsec;
using json = nlohmann::ordered_json;

namespace {

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// The same 12-significant-digit rendering drives both CSV text and JSON
// numbers, so the two formats carry the same values.
double decimal_value(double v) { return std::stod(format_decimal(v)); }

std::uint64_t seed_from_env() {
  const char* env = std::getenv("PAVSEC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    std::cerr << "warning: ignoring non-numeric PAVSEC_SEED\n";
    return 0;
  }
  return value;
}

constexpr const char* kRowHeader = "dist,n,m,exact,decimal,estimate,stderr,trials,seed,source";

std::string row_csv(const SuccessRow& row) {
  std::string line = row.dist + "," + std::to_string(row.n) + "," + std::to_string(row.m);
  line += ",";
  if (row.exact) line += row.exact->str();
  line += ",";
  if (row.exact) line += format_decimal(row.exact->to_double());
  line += ",";
  if (row.estimate) line += format_decimal(*row.estimate);
  line += ",";
  if (row.std_error) line += format_decimal(*row.std_error);
  line += ",";
  if (row.trials) line += std::to_string(*row.trials);
  line += ",";
  if (row.seed) line += std::to_string(*row.seed);
  line += "," + row.source;
  return line;
}

json row_json(const SuccessRow& row) {
  json j;
  j["dist"] = row.dist;
  j["n"] = row.n;
  j["m"] = row.m;
  if (row.exact) {
    j["exact"] = row.exact->str();
    j["decimal"] = decimal_value(row.exact->to_double());
  }
  if (row.estimate) j["estimate"] = decimal_value(*row.estimate);
  if (row.std_error) j["stderr"] = decimal_value(*row.std_error);
  if (row.trials) j["trials"] = *row.trials;
  if (row.seed) j["seed"] = *row.seed;
  j["source"] = row.source;
  return j;
}

std::string row_plain(const SuccessRow& row) {
  std::string line = "dist=" + row.dist + " n=" + std::to_string(row.n) +
                     " m=" + std::to_string(row.m);
  if (row.exact) {
    line += " exact=" + row.exact->str() +
            " decimal=" + format_decimal(row.exact->to_double());
  }
  if (row.estimate) line += " estimate=" + format_decimal(*row.estimate);
  if (row.std_error) line += " stderr=" + format_decimal(*row.std_error);
  if (row.trials) line += " trials=" + std::to_string(*row.trials);
  if (row.seed) line += " seed=" + std::to_string(*row.seed);
  line += " source=" + row.source;
  return line;
}

void emit_rows(const std::vector<SuccessRow>& rows, const std::string& format,
               bool single) {
  if (format == "csv") {
    std::cout << kRowHeader << "\n";
    for (const SuccessRow& row : rows) std::cout << row_csv(row) << "\n";
  } else if (format == "json") {
    if (single && rows.size() == 1) {
      std::cout << row_json(rows[0]).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const SuccessRow& row : rows) arr.push_back(row_json(row));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (const SuccessRow& row : rows) std::cout << row_plain(row) << "\n";
  }
}

// Exact value for one cutoff, or nullopt when out of every oracle's reach.
// `sweep_cache` holds the enumeration sweep when it was already computed.
struct ExactSource {
  std::optional<Rational> value;
  std::string source;
};

ExactSource pick_exact(int n, const Distribution& dist, int m,
                       const std::vector<Rational>* sweep_cache) {
  if (dist.kind == Distribution::Kind::low) {
    return {low_success(n, m), "closed-form"};
  }
  if (dist.kind == Distribution::Kind::avoiding && n >= 3) {
    if (auto cf = closed_form(n, dist.pattern, m)) return {*cf, "closed-form"};
  }
  if (n <= 10) {
    if (sweep_cache != nullptr) {
      return {(*sweep_cache)[static_cast<std::size_t>(m)], "enumeration"};
    }
    return {exact_success(n, dist, m), "enumeration"};
  }
  return {std::nullopt, ""};
}

int cmd_count(const std::string& pattern, int n, const std::string& format) {
  const Pattern eta = pattern_from_string(pattern);
  if (n < 1 || n > 1000) {
    std::cerr << "error: the Catalan formula path is guarded to 1 <= n <= 1000\n";
    return 1;
  }
  const BigInt formula = catalan(static_cast<unsigned>(n));
  std::optional<std::uint64_t> enumerated;
  if (n <= 10) {
    enumerated = count_avoiding(n, eta);
    if (BigInt(*enumerated) != formula) {
      std::cerr << "error: enumerated count " << *enumerated << " != catalan(" << n
                << ") = " << formula << "\n";
      return 1;
    }
  }
  if (format == "csv") {
    std::cout << "pattern,n,enumerated,catalan\n";
    std::cout << pattern << "," << n << ","
              << (enumerated ? std::to_string(*enumerated) : std::string{}) << ","
              << formula.str() << "\n";
  } else if (format == "json") {
    json j;
    j["pattern"] = pattern;
    j["n"] = n;
    if (enumerated) j["enumerated"] = *enumerated;
    j["catalan"] = formula.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pattern=" << pattern << " n=" << n << " enumerated="
              << (enumerated ? std::to_string(*enumerated) : std::string{"-"})
              << " catalan=" << formula.str() << "\n";
  }
  return 0;
}

int cmd_exact(const std::string& dist_name, int n, int m, const std::string& format) {
  const Distribution dist = Distribution::parse(dist_name);
  const ExactSource exact = pick_exact(n, dist, m, nullptr);
  if (!exact.value) {
    std::cerr << "error: no closed form covers " << dist_name << " at m=" << m
              << ", and exact enumeration is guarded to n <= 10 (got n=" << n
              << "); use `sweep` with --trials for a Monte Carlo estimate\n";
    return 1;
  }
  SuccessRow row;
  row.dist = dist.name();
  row.n = n;
  row.m = m;
  row.exact = exact.value;
  row.source = exact.source;
  emit_rows({row}, format, true);
  return 0;
}

int cmd_sweep(const std::string& dist_name, int n, std::uint64_t trials,
              std::uint64_t seed, const std::string& format) {
  const Distribution dist = Distribution::parse(dist_name);
  if (n < 1) {
    std::cerr << "error: requires n >= 1\n";
    return 1;
  }
  // One enumeration pass serves every cutoff when the class is enumerable.
  std::optional<std::vector<Rational>> cache;
  const bool enumerable =
      n <= 10 && (dist.kind != Distribution::Kind::low);
  bool cache_needed = false;
  if (enumerable) {
    for (int m = 0; m < n && !cache_needed; ++m) {
      if (dist.kind == Distribution::Kind::avoiding && n >= 3 &&
          closed_form(n, dist.pattern, m)) {
        continue;
      }
      cache_needed = true;
    }
    if (cache_needed) cache = exact_success_sweep(n, dist);
  }

  std::vector<SuccessRow> rows;
  for (int m = 0; m < n; ++m) {
    SuccessRow row;
    row.dist = dist.name();
    row.n = n;
    row.m = m;
    const ExactSource exact =
        pick_exact(n, dist, m, cache ? &*cache : nullptr);
    row.exact = exact.value;
    row.source = exact.source;
    const bool want_mc = trials > 0 || !row.exact;
    if (want_mc) {
      const std::uint64_t t = trials > 0 ? trials : 100000;
      const Estimate est =
          estimate(n, dist, m, t, fold_seed(seed, static_cast<std::uint64_t>(m)));
      row.estimate = est.p_hat;
      row.std_error = est.std_error;
      row.trials = est.trials;
      row.seed = est.seed;
      if (!row.exact) row.source = "monte-carlo";
    }
    rows.push_back(std::move(row));
  }
  if (dist.kind == Distribution::Kind::avoiding &&
      (dist.pattern == Pattern::p312 || dist.pattern == Pattern::p321) && n >= 3) {
    SuccessRow bound;
    bound.dist = dist.name();
    bound.n = n;
    bound.m = n - 2;
    bound.exact = lower_bound_312_321(n);
    bound.source = "bound";
    rows.push_back(std::move(bound));
  }
  emit_rows(rows, format, false);
  return 0;
}

struct LimitSpec {
  std::string m_label;
  Rational limit;
  Rational (*value)(int n);
};

int cmd_limits(const std::string& dist_name, int n_max, const std::string& format) {
  static const std::map<std::string, LimitSpec> specs = {
      {"av231", {"any", Rational(1, 4),
                 [](int n) { return catalan_ratio(static_cast<unsigned>(n)); }}},
      {"av132", {"any", Rational(1, 4),
                 [](int n) { return catalan_ratio(static_cast<unsigned>(n)); }}},
      {"av213", {"0|1", Rational(1, 4),
                 [](int n) { return catalan_ratio(static_cast<unsigned>(n)); }}},
      {"av123", {"1", Rational(3, 4),
                 [](int n) {
                   return Rational(1) - catalan_ratio(static_cast<unsigned>(n));
                 }}},
      {"bound312", {"n-2", Rational(7, 16), [](int n) { return lower_bound_312_321(n); }}},
      {"bound321", {"n-2", Rational(7, 16), [](int n) { return lower_bound_312_321(n); }}},
      {"low", {"any", Rational(0), [](int n) { return Rational(1, n); }}},
  };
  const auto it = specs.find(dist_name);
  if (it == specs.end()) {
    std::cerr << "error: --dist must be one of av231 av132 av213 av123 bound312 "
                 "bound321 low\n";
    return 1;
  }
  const LimitSpec& spec = it->second;
  const int n_min = dist_name == "low" ? 1 : 3;
  if (n_max < n_min || n_max > 1000000) {
    std::cerr << "error: --n-max must be in [" << n_min << ", 1000000] for "
              << dist_name << "\n";
    return 1;
  }
  std::vector<int> grid;
  for (int n = 10; n < n_max; n *= 10) {
    if (n >= n_min) grid.push_back(n);
  }
  grid.push_back(n_max);

  struct LimitRow {
    int n;
    Rational exact;
    Rational gap;
  };
  std::vector<LimitRow> rows;
  for (int n : grid) {
    const Rational v = spec.value(n);
    rows.push_back({n, v, abs(v - spec.limit)});
  }

  if (format == "csv") {
    std::cout << "dist,n,m,exact,decimal,limit,gap\n";
    for (const LimitRow& r : rows) {
      std::cout << dist_name << "," << r.n << "," << spec.m_label << ","
                << r.exact.str() << "," << format_decimal(r.exact.to_double()) << ","
                << spec.limit.str() << "," << format_decimal(r.gap.to_double()) << "\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const LimitRow& r : rows) {
      json j;
      j["dist"] = dist_name;
      j["n"] = r.n;
      j["m"] = spec.m_label;
      j["exact"] = r.exact.str();
      j["decimal"] = decimal_value(r.exact.to_double());
      j["limit"] = spec.limit.str();
      j["gap"] = decimal_value(r.gap.to_double());
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const LimitRow& r : rows) {
      std::cout << "dist=" << dist_name << " n=" << r.n << " m=" << spec.m_label
                << " exact=" << r.exact.str() << " decimal="
                << format_decimal(r.exact.to_double()) << " limit=" << spec.limit.str()
                << " gap=" << format_decimal(r.gap.to_double()) << "\n";
    }
  }
  return 0;
}

int cmd_sample(const std::string& pattern, int n, int count, std::uint64_t seed) {
  const Pattern eta = pattern_from_string(pattern);
  if (n < 1 || count < 1) {
    std::cerr << "error: requires n >= 1 and count >= 1\n";
    return 1;
  }
  RandomSource rng(seed);
  for (int i = 0; i < count; ++i) {
    const Permutation p = sample_avoiding(n, eta, rng);
    if (contains(p, eta)) {
      std::cerr << "error: sampler self-check failed: " << p.str() << " contains "
                << pattern << "\n";
      return 1;
    }
    std::cout << p.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact and Monte Carlo success probabilities of secretary cutoff "
      "strategies under pattern-avoiding and adversarial arrival orders"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"plain", "csv", "json"};
  const std::vector<std::string> patterns = {"123", "132", "213", "231", "312", "321"};
  const std::vector<std::string> dists = {"uniform", "low",   "av123", "av132",
                                          "av213",   "av231", "av312", "av321"};
  const std::uint64_t env_seed = seed_from_env();

  std::string pattern;
  std::string dist;
  std::string format = "plain";
  int n = 0;
  int m = 0;
  int count = 1;
  int n_max = 1000000;
  std::uint64_t trials = 0;
  std::uint64_t seed = env_seed;

  CLI::App* c_count = app.add_subcommand("count", "avoider count vs the Catalan number");
  c_count->add_option("--pattern", pattern, "length-3 pattern")
      ->required()
      ->check(CLI::IsMember(patterns));
  c_count->add_option("--n", n, "permutation length")->required();
  c_count->add_option("--format", format)->check(CLI::IsMember(formats));

  CLI::App* c_exact = app.add_subcommand("exact", "exact success probability of S(n,m)");
  c_exact->add_option("--dist", dist, "arrival-order distribution")
      ->required()
      ->check(CLI::IsMember(dists));
  c_exact->add_option("--n", n)->required();
  c_exact->add_option("--m", m, "cutoff")->required();
  c_exact->add_option("--format", format)->check(CLI::IsMember(formats));

  CLI::App* c_sweep = app.add_subcommand("sweep", "success probability for every cutoff");
  c_sweep->add_option("--dist", dist)->required()->check(CLI::IsMember(dists));
  c_sweep->add_option("--n", n)->required();
  c_sweep->add_option("--trials", trials, "Monte Carlo trials per cutoff (0 = exact only)");
  c_sweep->add_option("--seed", seed, "base seed (default: PAVSEC_SEED or 0)");
  c_sweep->add_option("--format", format)->check(CLI::IsMember(formats));

  CLI::App* c_limits = app.add_subcommand("limits", "closed-form convergence to the limit");
  c_limits
      ->add_option("--dist", dist,
                   "av231 av132 av213 av123 bound312 bound321 low")
      ->required();
  c_limits->add_option("--n-max", n_max, "largest n on the geometric grid");
  c_limits->add_option("--format", format)->check(CLI::IsMember(formats));

  CLI::App* c_sample = app.add_subcommand("sample", "stream of uniform avoiders");
  c_sample->add_option("--pattern", pattern)->required()->check(CLI::IsMember(patterns));
  c_sample->add_option("--n", n)->required();
  c_sample->add_option("--count", count, "number of samples");
  c_sample->add_option("--seed", seed, "base seed (default: PAVSEC_SEED or 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_count->parsed()) return cmd_count(pattern, n, format);
    if (c_exact->parsed()) return cmd_exact(dist, n, m, format);
    if (c_sweep->parsed()) return cmd_sweep(dist, n, trials, seed, format);
    if (c_limits->parsed()) return cmd_limits(dist, n_max, format);
    if (c_sample->parsed()) return cmd_sample(pattern, n, count, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
