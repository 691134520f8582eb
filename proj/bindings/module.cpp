// Python bindings for the core operations. Exact rationals cross the
// boundary as fractions.Fraction and big integers as python ints, both via
// their decimal string forms.

#include "pavsec/catalan.hpp"
#include "pavsec/exact.hpp"
#include "pavsec/montecarlo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace pavsec;

namespace {

py::object to_py_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_fraction(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(value.str());
}

py::list to_fraction_list(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& v : values) out.append(to_fraction(v));
  return out;
}

Permutation perm_from_list(const std::vector<int>& entries) {
  return Permutation(entries);
}

}  // namespace

PYBIND11_MODULE(pavsec, m) {
  m.doc() =
      "secretary-problem cutoff strategies over pattern-avoiding and "
      "adversarial arrival orders";

  m.def("catalan", [](unsigned n) { return to_py_int(catalan(n)); }, py::arg("n"));
  m.def("catalan_ratio", [](unsigned n) { return to_fraction(catalan_ratio(n)); },
        py::arg("n"));
  m.def("catalan_asymptotic", &catalan_asymptotic, py::arg("n"));

  m.def(
      "contains",
      [](const std::vector<int>& sigma, const std::string& eta) {
        return contains(perm_from_list(sigma), pattern_from_string(eta));
      },
      py::arg("sigma"), py::arg("eta"));
  m.def(
      "enumerate_avoiding",
      [](int n, const std::string& eta) {
        py::list out;
        for (const Permutation& p : enumerate_avoiding(n, pattern_from_string(eta))) {
          out.append(p.entries());
        }
        return out;
      },
      py::arg("n"), py::arg("eta"));
  m.def(
      "reverse",
      [](const std::vector<int>& sigma) { return reverse(perm_from_list(sigma)).entries(); },
      py::arg("sigma"));
  m.def(
      "complement",
      [](const std::vector<int>& sigma) {
        return complement(perm_from_list(sigma)).entries();
      },
      py::arg("sigma"));
  m.def(
      "inverse",
      [](const std::vector<int>& sigma) { return inverse(perm_from_list(sigma)).entries(); },
      py::arg("sigma"));

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &RandomSource::next_u64)
      .def("next_below", &RandomSource::next_below, py::arg("bound"));

  m.def(
      "sample_uniform",
      [](int n, RandomSource& rng) { return sample_uniform(n, rng).entries(); },
      py::arg("n"), py::arg("rng"));
  m.def(
      "sample_avoiding",
      [](int n, const std::string& eta, RandomSource& rng) {
        return sample_avoiding(n, pattern_from_string(eta), rng).entries();
      },
      py::arg("n"), py::arg("eta"), py::arg("rng"));
  m.def(
      "sample_dyck",
      [](int n, RandomSource& rng) {
        const DyckPath path = sample_dyck(n, rng);
        return std::vector<int>(path.steps.begin(), path.steps.end());
      },
      py::arg("n"), py::arg("rng"));
  m.def(
      "dyck_to_321",
      [](const std::vector<int>& steps) {
        DyckPath path;
        path.steps.assign(steps.begin(), steps.end());
        return dyck_to_321(path).entries();
      },
      py::arg("steps"));
  m.def(
      "low_permutation",
      [](int n, int j, bool decreasing) {
        return low_permutation(n, j,
                               decreasing ? LowCompletion::decreasing
                                          : LowCompletion::increasing)
            .entries();
      },
      py::arg("n"), py::arg("j"), py::arg("decreasing") = false);
  m.def(
      "sample_low",
      [](int n, RandomSource& rng) { return sample_low(n, rng).entries(); },
      py::arg("n"), py::arg("rng"));

  py::class_<Outcome>(m, "Outcome")
      .def_property_readonly(
          "selected_position",
          [](const Outcome& o) -> py::object {
            if (!o.selected_position) return py::none();
            return py::int_(*o.selected_position);
          })
      .def_readonly("success", &Outcome::success)
      .def("__repr__", [](const Outcome& o) {
        std::string pos =
            o.selected_position ? std::to_string(*o.selected_position) : "None";
        return "Outcome(selected_position=" + pos +
               ", success=" + (o.success ? "True" : "False") + ")";
      });

  m.def(
      "run_strategy",
      [](const std::vector<int>& sigma, int cutoff) {
        return run_strategy(perm_from_list(sigma), cutoff);
      },
      py::arg("sigma"), py::arg("cutoff"));
  m.def(
      "record_indicators",
      [](const std::vector<int>& sigma) {
        return record_indicators(perm_from_list(sigma));
      },
      py::arg("sigma"));

  m.def(
      "exact_success",
      [](int n, const std::string& dist, int cutoff) {
        return to_fraction(exact_success(n, Distribution::parse(dist), cutoff));
      },
      py::arg("n"), py::arg("dist"), py::arg("cutoff"));
  m.def(
      "closed_form",
      [](int n, const std::string& eta, int cutoff) -> py::object {
        const auto cf = closed_form(n, pattern_from_string(eta), cutoff);
        if (!cf) return py::none();
        return to_fraction(*cf);
      },
      py::arg("n"), py::arg("eta"), py::arg("cutoff"));
  m.def("d_value", [](int n, int m) { return to_fraction(d_value(n, m)); },
        py::arg("n"), py::arg("m"));
  m.def("low_success", [](int n, int m) { return to_fraction(low_success(n, m)); },
        py::arg("n"), py::arg("m"));
  m.def("lower_bound_312_321",
        [](int n) { return to_fraction(lower_bound_312_321(n)); }, py::arg("n"));
  m.def(
      "max_position_law",
      [](int n, const std::string& eta) {
        return to_fraction_list(max_position_law(n, pattern_from_string(eta)));
      },
      py::arg("n"), py::arg("eta"));

  py::class_<IndicatorLaw>(m, "IndicatorLaw")
      .def_readonly("n", &IndicatorLaw::n)
      .def_readonly("independent", &IndicatorLaw::independent)
      .def_property_readonly(
          "joint", [](const IndicatorLaw& law) { return to_fraction_list(law.joint); })
      .def_property_readonly("marginals", [](const IndicatorLaw& law) {
        return to_fraction_list(law.marginals);
      });
  m.def(
      "indicator_joint_law",
      [](int n, const std::string& dist) {
        return indicator_joint_law(n, Distribution::parse(dist));
      },
      py::arg("n"), py::arg("dist"));

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("p_hat", &Estimate::p_hat)
      .def_readonly("std_error", &Estimate::std_error)
      .def_readonly("trials", &Estimate::trials)
      .def_readonly("seed", &Estimate::seed)
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(p_hat=" + std::to_string(e.p_hat) +
               ", std_error=" + std::to_string(e.std_error) +
               ", trials=" + std::to_string(e.trials) +
               ", seed=" + std::to_string(e.seed) + ")";
      });

  m.def(
      "estimate",
      [](int n, const std::string& dist, int cutoff, std::uint64_t trials,
         std::uint64_t seed, unsigned workers) {
        return estimate(n, Distribution::parse(dist), cutoff, trials, seed, workers);
      },
      py::arg("n"), py::arg("dist"), py::arg("cutoff"), py::arg("trials"),
      py::arg("seed"), py::arg("workers") = 0);
  m.def(
      "sweep",
      [](int n, const std::string& dist, std::uint64_t trials, std::uint64_t seed,
         unsigned workers) {
        return sweep(n, Distribution::parse(dist), trials, seed, workers);
      },
      py::arg("n"), py::arg("dist"), py::arg("trials"), py::arg("seed"),
      py::arg("workers") = 0);
}
