#pragma once

#include <span>
#include <vector>

#include "mber/bitlattice.hpp"
#include "mber/table.hpp"

namespace mber {

struct FrechetBounds {
  double lower;
  double upper;
};

// Dependence parameters of a binary joint distribution: for every non-empty
// subset A of variables, the probability that all variables in A equal zero.
// Stored for all 2^n masks with the empty set fixed at 1.
class DependenceParams {
 public:
  static DependenceParams from_table(const ProbabilityTable& table);
  // values indexed by subset mask; values[0] must be 1 and the rest in [0,1].
  // No joint-consistency check happens here: a lattice may be hypothetical
  // and only table_from_params decides whether a distribution exists.
  static DependenceParams from_values(int n, std::vector<double> values);

  int dim() const { return n_; }
  double at(Mask a) const;
  double singleton(int var) const;  // var is 1-based
  const std::vector<double>& values() const { return values_; }

 private:
  DependenceParams(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {}
  int n_;
  std::vector<double> values_;
};

// Sharpest bounds on the joint-zero probability of the variables in `a`
// knowing only the singleton parameters: the m-variable intersection bound
// below, the smallest member above.
FrechetBounds frechet_bounds(int n, std::span<const double> singletons, Mask a);
FrechetBounds frechet_bounds(const DependenceParams& params, Mask a);

// Normalized dependence measure in [-1,1] for a subset of two or more
// variables: the gap between the joint-zero probability and its independence
// value, scaled by the distance to whichever bound the gap points at. Both
// degenerate cases (bound equals independence) give 0.
double dependence_measure(const DependenceParams& params, Mask a);

// The measures of every subset with |A| >= 2, kept in report order.
class DependenceMeasures {
 public:
  explicit DependenceMeasures(const DependenceParams& params);

  int dim() const { return n_; }
  double at(Mask a) const;
  // (mask, measure) pairs, decreasing cardinality then report order.
  const std::vector<std::pair<Mask, double>>& rows() const { return rows_; }

 private:
  int n_;
  std::vector<std::pair<Mask, double>> rows_;
  std::vector<double> by_mask_;
};

DependenceMeasures dependence_measures(const DependenceParams& params);

// Value of the n-variable subcopula at a grid point: every coordinate must
// be 0, 1 or that variable's singleton parameter.
double subcopula_eval(const DependenceParams& params, std::span<const double> u);

// Largest signed deviation of the bivariate subcopula from the independence
// subcopula over its 3x3 grid: sup(S - uv) - sup(uv - S). Positive deviation
// normalized by the upper Frechet bound and negative by the lower one
// reproduces the bivariate dependence measure.
double bivariate_deviation(double th1, double th2, double th12);

// Admissible joint-zero probability interval for a pair with the given
// singleton parameters: [max(th1 + th2 - 1, 0), min(th1, th2)].
FrechetBounds bivariate_admissible_interval(double th1, double th2);

// Whether (th1, th2) can coexist with a fixed pairwise parameter th12.
bool bivariate_admissible_region_contains(double th12, double th1, double th2);

// Exact admissible interval for the triple-zero probability given all three
// singleton and all three pairwise parameters; intersects the sixteen cell
// constraints 0 <= p <= 1. Empty intersection is an incompatibility error.
FrechetBounds trivariate_admissible_interval(double th1, double th2, double th3, double th12,
                                             double th13, double th23);

DependenceParams dependence_params(const ProbabilityTable& table);

}  // namespace mber
