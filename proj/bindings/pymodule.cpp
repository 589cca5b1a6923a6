#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mber/bitlattice.hpp"
#include "mber/construct.hpp"
#include "mber/dependence.hpp"
#include "mber/inference.hpp"
#include "mber/sampling.hpp"
#include "mber/table.hpp"

namespace py = pybind11;
using namespace mber;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

int dim_of_length(std::size_t len) {
  for (int n = 1; n <= kMaxDim; ++n)
    if (table_size(n) == len) return n;
  throw std::invalid_argument("cell array length must be 2^n for n in 1..24");
}

std::vector<double> vector_of(const DoubleArray& arr, const char* what) {
  if (arr.ndim() != 1) throw std::invalid_argument(std::string(what) + " must be 1-dimensional");
  const auto view = arr.unchecked<1>();
  std::vector<double> out(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) out[static_cast<std::size_t>(i)] = view(i);
  return out;
}

ProbabilityTable table_of(const DoubleArray& cells) {
  std::vector<double> values = vector_of(cells, "cells");
  const int n = dim_of_length(values.size());
  return ProbabilityTable(n, std::move(values));
}

DependenceParams params_of(const DoubleArray& values) {
  std::vector<double> lattice = vector_of(values, "parameter lattice");
  const int n = dim_of_length(lattice.size());
  return DependenceParams::from_values(n, std::move(lattice));
}

SampleMatrix matrix_of(const IntArray& data) {
  if (data.ndim() != 2) throw std::invalid_argument("data must be a 2-dimensional 0/1 array");
  const auto view = data.unchecked<2>();
  const int n = check_dim(static_cast<int>(view.shape(1)));
  std::vector<std::uint32_t> rows;
  rows.reserve(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t r = 0; r < view.shape(0); ++r) {
    std::uint32_t bits = 0;
    for (py::ssize_t c = 0; c < view.shape(1); ++c) {
      const std::int64_t cell = view(r, c);
      if (cell != 0 && cell != 1) throw std::invalid_argument("data cells must be 0 or 1");
      bits = (bits << 1) | static_cast<std::uint32_t>(cell);
    }
    rows.push_back(bits);
  }
  return SampleMatrix(n, std::move(rows));
}

py::array_t<double> array_of(const std::vector<double>& values) {
  py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
  auto view = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < values.size(); ++i) view(static_cast<py::ssize_t>(i)) = values[i];
  return out;
}

py::list measures_list(const DependenceMeasures& measures) {
  py::list out;
  for (const auto& [mask, value] : measures.rows()) {
    py::dict row;
    row["subset"] = vars_of_mask(measures.dim(), mask);
    row["value"] = value;
    out.append(row);
  }
  return out;
}

py::list estimate_list(const std::vector<EstimateRow>& rows, int n, bool patterns) {
  py::list out;
  for (const auto& row : rows) {
    py::dict entry;
    if (patterns)
      entry["pattern"] = pattern_of_bits(n, row.id);
    else
      entry["subset"] = vars_of_mask(n, row.id);
    entry["lower"] = row.lower;
    entry["median"] = row.median;
    entry["upper"] = row.upper;
    out.append(entry);
  }
  return out;
}

py::list rate_list(const std::vector<std::pair<std::uint32_t, double>>& rates, int n,
                   bool patterns) {
  py::list out;
  for (const auto& [id, rate] : rates) {
    py::dict entry;
    if (patterns)
      entry["pattern"] = pattern_of_bits(n, id);
    else
      entry["subset"] = vars_of_mask(n, id);
    entry["coverage"] = rate;
    out.append(entry);
  }
  return out;
}

Mask mask_of(int n, const std::vector<int>& vars) {
  return mask_of_vars(n, std::span(vars.data(), vars.size()));
}

}  // namespace

PYBIND11_MODULE(_mber, m) {
  m.doc() = "dependence analysis of multivariate binary data";

  m.def(
      "dependence_params",
      [](const DoubleArray& cells) {
        return array_of(DependenceParams::from_table(table_of(cells)).values());
      },
      py::arg("cells"),
      "Joint-zero probability of every variable subset, indexed by subset mask "
      "(variable k at bit n-k); entry 0 is the empty set and equals 1.");

  m.def(
      "dependence_measures",
      [](const DoubleArray& params) { return measures_list(DependenceMeasures(params_of(params))); },
      py::arg("params"),
      "Normalized dependence measure of every subset of two or more variables, "
      "largest subsets first.");

  m.def(
      "table_from_params",
      [](const DoubleArray& params) { return array_of(table_from_params(params_of(params)).values()); },
      py::arg("params"),
      "Invert a full parameter lattice into the joint probability table it determines.");

  m.def(
      "marginal",
      [](const DoubleArray& cells, const std::vector<int>& keep) {
        const ProbabilityTable table = table_of(cells);
        return array_of(table.marginal(mask_of(table.dim(), keep)).values());
      },
      py::arg("cells"), py::arg("keep"), "Marginal table of the kept variables.");

  m.def(
      "conditional",
      [](const DoubleArray& cells, const std::vector<int>& target, const std::vector<int>& given,
         const std::vector<int>& values) {
        const ProbabilityTable table = table_of(cells);
        return array_of(table
                            .conditional(mask_of(table.dim(), target),
                                         mask_of(table.dim(), given),
                                         std::span(values.data(), values.size()))
                            .values());
      },
      py::arg("cells"), py::arg("target"), py::arg("given"), py::arg("values"),
      "Conditional table of the target variables given fixed values.");

  m.def(
      "frechet_bounds",
      [](const std::vector<double>& singletons) {
        const int n = check_dim(static_cast<int>(singletons.size()));
        const FrechetBounds b =
            frechet_bounds(n, std::span(singletons.data(), singletons.size()), full_mask(n));
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("singletons"),
      "Sharpest joint-zero probability bounds knowing only the singleton parameters.");

  m.def(
      "bivariate_admissible_interval",
      [](double th1, double th2) {
        const FrechetBounds b = bivariate_admissible_interval(th1, th2);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("th1"), py::arg("th2"));

  m.def("bivariate_admissible_region_contains", &bivariate_admissible_region_contains,
        py::arg("th12"), py::arg("th1"), py::arg("th2"));

  m.def(
      "trivariate_admissible_interval",
      [](double th1, double th2, double th3, double th12, double th13, double th23) {
        const FrechetBounds b = trivariate_admissible_interval(th1, th2, th3, th12, th13, th23);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("th1"), py::arg("th2"), py::arg("th3"), py::arg("th12"), py::arg("th13"),
      py::arg("th23"),
      "Exact admissible interval for the triple-zero probability; raises if the "
      "pairwise parameters are incompatible.");

  m.def("bivariate_deviation", &bivariate_deviation, py::arg("th1"), py::arg("th2"),
        py::arg("th12"),
        "Largest signed deviation of the bivariate subcopula from independence.");

  m.def("bivariate_param_from_measure", &bivariate_param_from_measure, py::arg("th1"),
        py::arg("th2"), py::arg("mu"),
        "Pairwise joint-zero probability with a prescribed dependence measure.");

  m.def(
      "trivariate_from_measures",
      [](double th1, double th2, double th3, double mu12, double mu13, double mu23,
         double mu123) {
        return array_of(
            trivariate_from_measures(th1, th2, th3, mu12, mu13, mu23, mu123).values());
      },
      py::arg("th1"), py::arg("th2"), py::arg("th3"), py::arg("mu12"), py::arg("mu13"),
      py::arg("mu23"), py::arg("mu123"),
      "Trivariate table from singleton parameters plus pairwise and triple measures.");

  m.def(
      "subcopula",
      [](const DoubleArray& params, const std::vector<double>& u) {
        return subcopula_eval(params_of(params), std::span(u.data(), u.size()));
      },
      py::arg("params"), py::arg("u"),
      "Subcopula value at a grid point; each coordinate must be 0, 1 or that "
      "variable's singleton parameter.");

  m.def(
      "simulate",
      [](const DoubleArray& cells, std::size_t m, std::uint64_t seed, std::uint64_t stream) {
        const ProbabilityTable table = table_of(cells);
        const SampleMatrix rows = simulate(table, m, SeedSpec{seed, stream});
        const int n = rows.dim();
        py::array_t<std::uint8_t> out({static_cast<py::ssize_t>(rows.rows()),
                                       static_cast<py::ssize_t>(n)});
        auto view = out.mutable_unchecked<2>();
        for (std::size_t r = 0; r < rows.rows(); ++r)
          for (int v = 1; v <= n; ++v)
            view(static_cast<py::ssize_t>(r), v - 1) =
                static_cast<std::uint8_t>(rows.cell(r, v));
        return out;
      },
      py::arg("cells"), py::arg("m"), py::arg("seed") = 1234, py::arg("stream") = 0,
      "Simulate m observations, one row per draw, columns in variable order.");

  m.def(
      "empirical_table",
      [](const IntArray& data) { return array_of(empirical_table(matrix_of(data)).values()); },
      py::arg("data"), "Relative frequencies of the observed patterns.");

  m.def(
      "fit",
      [](const IntArray& data, double prior) {
        const PointEstimates est = point_estimates(posterior(counts(matrix_of(data)), prior));
        py::dict out;
        out["p"] = array_of(est.table.values());
        out["dependence_params"] = array_of(est.params.values());
        out["dependence_measures"] = measures_list(est.measures);
        return out;
      },
      py::arg("data"), py::arg("prior") = 0.5,
      "Posterior-mean table with its dependence parameters and measures.");

  m.def(
      "infer",
      [](const IntArray& data, double prior, std::size_t nsim, double probint,
         std::uint64_t seed, std::uint64_t stream) {
        const InferenceReport rep =
            infer(matrix_of(data), prior, nsim, probint, SeedSpec{seed, stream});
        py::dict out;
        out["n"] = rep.n;
        out["nsim"] = rep.nsim;
        out["probint"] = rep.probint;
        out["probabilities"] = estimate_list(rep.probabilities, rep.n, true);
        out["dependence_params"] = estimate_list(rep.params, rep.n, false);
        out["dependence_measures"] = estimate_list(rep.measures, rep.n, false);
        return out;
      },
      py::arg("data"), py::arg("prior") = 0.5, py::arg("nsim") = 10000,
      py::arg("probint") = 0.95, py::arg("seed") = 1234, py::arg("stream") = 0,
      "Posterior quantile intervals for probabilities, parameters and measures.");

  m.def(
      "coverage_study",
      [](const DoubleArray& cells, std::size_t m, std::size_t reps, double prior,
         std::size_t nsim, double probint, std::uint64_t seed, std::uint64_t stream) {
        const CoverageReport rep = coverage_study(table_of(cells), m, reps, prior, nsim,
                                                  probint, SeedSpec{seed, stream});
        py::dict out;
        out["n"] = rep.n;
        out["reps"] = rep.reps;
        out["probabilities"] = rate_list(rep.probabilities, rep.n, true);
        out["dependence_params"] = rate_list(rep.params, rep.n, false);
        out["dependence_measures"] = rate_list(rep.measures, rep.n, false);
        return out;
      },
      py::arg("cells"), py::arg("m"), py::arg("reps"), py::arg("prior") = 0.5,
      py::arg("nsim") = 10000, py::arg("probint") = 0.95, py::arg("seed") = 1234,
      py::arg("stream") = 0, "Interval coverage rates under repeated sampling.");

  m.def(
      "rule_accuracy",
      [](const DoubleArray& cells, const IntArray& data, int target,
         const std::vector<int>& given, std::size_t nsim, std::uint64_t seed,
         std::uint64_t stream) {
        const ProbabilityTable table = table_of(cells);
        const Mask given_mask = given.empty() ? 0 : mask_of(table.dim(), given);
        return rule_accuracy(table, matrix_of(data), target, given_mask, nsim,
                             SeedSpec{seed, stream});
      },
      py::arg("cells"), py::arg("data"), py::arg("target"),
      py::arg("given") = std::vector<int>{}, py::arg("nsim") = 1000, py::arg("seed") = 1234,
      py::arg("stream") = 0,
      "Expected hit rate of the randomized prediction rule for the target variable.");
}
