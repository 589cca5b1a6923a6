#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mber/dependence.hpp"
#include "mber/table.hpp"

namespace mber {

// Inverts a full dependence-parameter lattice into the joint table it
// determines. Tiny negative cells (>= -1e-9) produced by rounding are
// clamped to zero; anything worse is an incompatibility error naming the
// violated pattern.
ProbabilityTable table_from_params(const DependenceParams& params);

struct LayeredBuild {
  ProbabilityTable table;
  DependenceParams params;
};

// Cells of one layer: (pattern bits, probability). Layer k may only assign
// patterns with exactly k ones.
using LayerCells = std::vector<std::pair<std::uint32_t, double>>;

// Builds a table layer by layer over pattern weight 0..layers.size()-1,
// defaulting unassigned cells to zero and giving the all-ones pattern the
// leftover mass. The running sum may never exceed 1 (up to 1e-12).
LayeredBuild build_layered(int n, const std::vector<LayerCells>& layers);

// Pairwise joint-zero probability with a prescribed dependence measure.
double bivariate_param_from_measure(double th1, double th2, double mu);

// Trivariate table from singleton parameters plus pairwise and triple
// dependence measures. Measure inversion can produce parameter lattices
// with no joint distribution; that surfaces as an incompatibility error
// from table_from_params.
ProbabilityTable trivariate_from_measures(double th1, double th2, double th3, double mu12,
                                          double mu13, double mu23, double mu123);

}  // namespace mber
