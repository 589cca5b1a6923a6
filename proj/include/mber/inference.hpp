#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mber/dependence.hpp"
#include "mber/sampling.hpp"
#include "mber/table.hpp"

namespace mber {

struct CountVector {
  int n;
  std::vector<std::uint64_t> cells;  // per pattern index
  std::uint64_t total;
};

CountVector counts(const SampleMatrix& data);

// Conjugate update: concentration = prior + count, cell by cell.
struct DirichletPosterior {
  int n;
  std::vector<double> alphas;
};

DirichletPosterior posterior(const CountVector& data, double prior);
DirichletPosterior posterior(const CountVector& data, std::span<const double> prior);

std::vector<double> posterior_mean(const DirichletPosterior& post);

struct PointEstimates {
  ProbabilityTable table;
  DependenceParams params;
  DependenceMeasures measures;
};

// Posterior-mean table with the parameters and measures it induces.
PointEstimates point_estimates(const DirichletPosterior& post);

// Equal-tailed posterior interval plus median for one scalar quantity. id is
// the pattern bits (probability rows) or the subset mask (parameter and
// measure rows).
struct EstimateRow {
  std::uint32_t id;
  double lower;
  double median;
  double upper;
};

struct InferenceReport {
  int n;
  std::size_t nsim;
  double probint;
  std::vector<EstimateRow> probabilities;  // rank order, 2^n rows
  std::vector<EstimateRow> params;         // report order, 2^n - 1 rows
  std::vector<EstimateRow> measures;       // report order, 2^n - n - 1 rows
};

// Monte Carlo summary of the posterior: nsim Dirichlet draws, each mapped to
// its probabilities, dependence parameters and dependence measures, reduced
// to equal-tailed probint intervals and medians. Requires nsim >= 1000.
InferenceReport infer(const SampleMatrix& data, double prior, std::size_t nsim, double probint,
                      SeedSpec seed);
InferenceReport infer_from_counts(const CountVector& data, double prior, std::size_t nsim,
                                  double probint, SeedSpec seed);

// Fraction of replications whose interval covered the true value, one entry
// per quantity: (pattern bits or subset mask, rate), aligned with the
// corresponding InferenceReport rows.
struct CoverageReport {
  int n;
  std::size_t reps;
  std::vector<std::pair<std::uint32_t, double>> probabilities;
  std::vector<std::pair<std::uint32_t, double>> params;
  std::vector<std::pair<std::uint32_t, double>> measures;
};

// Repeated-sampling check of the interval machinery: reps simulated data
// sets of size m from `truth`, one inference each, scoring how often each
// interval covers the true quantity. Replicate r uses stream pair
// (stream_id + 2r, stream_id + 2r + 1) for simulation and inference.
CoverageReport coverage_study(const ProbabilityTable& truth, std::size_t m, std::size_t reps,
                              double prior, std::size_t nsim, double probint, SeedSpec seed);

// Expected hit rate of the prediction rule "predict target = 1 when its
// conditional probability given the observed values of `given` exceeds a
// uniform draw", averaged over nsim randomizations of the predictions for
// the rows of `data`. given = 0 scores the unconditional rule.
double rule_accuracy(const ProbabilityTable& model, const SampleMatrix& data, int target,
                     Mask given, std::size_t nsim, SeedSpec seed);

}  // namespace mber
