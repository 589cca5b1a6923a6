#include "mber/inference.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "mber/errors.hpp"

namespace mber {

CountVector counts(const SampleMatrix& data) {
  if (data.rows() == 0) throw DomainError("counts need at least one observation");
  std::vector<std::uint64_t> cells(table_size(data.dim()), 0);
  for (std::size_t r = 0; r < data.rows(); ++r) ++cells[data.row_bits(r)];
  return CountVector{data.dim(), std::move(cells), data.rows()};
}

DirichletPosterior posterior(const CountVector& data, double prior) {
  if (!(prior > 0.0)) throw DomainError("prior concentration must be positive");
  std::vector<double> alphas(data.cells.size());
  for (std::size_t i = 0; i < alphas.size(); ++i)
    alphas[i] = prior + static_cast<double>(data.cells[i]);
  return DirichletPosterior{data.n, std::move(alphas)};
}

DirichletPosterior posterior(const CountVector& data, std::span<const double> prior) {
  if (prior.size() != data.cells.size())
    throw DomainError("prior vector needs one concentration per pattern");
  std::vector<double> alphas(data.cells.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(prior[i] > 0.0)) throw DomainError("prior concentrations must be positive");
    alphas[i] = prior[i] + static_cast<double>(data.cells[i]);
  }
  return DirichletPosterior{data.n, std::move(alphas)};
}

std::vector<double> posterior_mean(const DirichletPosterior& post) {
  double total = 0.0;
  for (double a : post.alphas) total += a;
  std::vector<double> mean(post.alphas.size());
  for (std::size_t i = 0; i < mean.size(); ++i) mean[i] = post.alphas[i] / total;
  return mean;
}

PointEstimates point_estimates(const DirichletPosterior& post) {
  ProbabilityTable table(post.n, posterior_mean(post));
  DependenceParams params = DependenceParams::from_table(table);
  DependenceMeasures measures(params);
  return PointEstimates{std::move(table), std::move(params), std::move(measures)};
}

namespace {

constexpr double kDegenerate = 1e-12;

// Sorts one quantity's draws and reads off the equal-tailed interval and the
// median with linear interpolation between order statistics.
EstimateRow summarize(std::uint32_t id, std::span<double> draws, double probint) {
  std::sort(draws.begin(), draws.end());
  const auto quantile = [&](double q) {
    const double h = q * (static_cast<double>(draws.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= draws.size()) return draws.back();
    return draws[lo] + (h - static_cast<double>(lo)) * (draws[lo + 1] - draws[lo]);
  };
  const double tail = (1.0 - probint) / 2.0;
  return EstimateRow{id, quantile(tail), quantile(0.5), quantile(1.0 - tail)};
}

}  // namespace

InferenceReport infer_from_counts(const CountVector& data, double prior, std::size_t nsim,
                                  double probint, SeedSpec seed) {
  if (nsim < 1000) throw DomainError("nsim must be at least 1000");
  if (!(probint > 0.0 && probint < 1.0))
    throw DomainError("interval probability must lie strictly between 0 and 1");
  const DirichletPosterior post = posterior(data, prior);
  const int n = data.n;
  const std::size_t size = table_size(n);
  const Mask full = full_mask(n);
  const auto param_masks = subsets_by_report_order(n, 1);
  const auto measure_masks = subsets_by_report_order(n, 2);

  const std::size_t quantities = size + param_masks.size() + measure_masks.size();
  // Quantity-major so each scalar's draws sort as one contiguous slice.
  std::vector<double> draws(quantities * nsim);
  Rng rng(seed);
  std::vector<double> zeta(size);
  for (std::size_t k = 0; k < nsim; ++k) {
    const std::vector<double> p = dirichlet_draw(post.alphas, rng);
    for (std::size_t i = 0; i < size; ++i) draws[i * nsim + k] = p[i];
    zeta = p;
    zeta_transform_inplace(n, zeta);
    const auto theta = [&](Mask a) { return a == 0 ? 1.0 : zeta[full ^ a]; };
    std::size_t q = size;
    for (Mask a : param_masks) draws[q++ * nsim + k] = theta(a);
    for (Mask a : measure_masks) {
      double prod = 1.0;
      double sum = 0.0;
      double smallest = 1.0;
      int m = 0;
      for (int v = 1; v <= n; ++v) {
        if (!(a & (Mask{1} << (n - v)))) continue;
        const double th = theta(Mask{1} << (n - v));
        prod *= th;
        sum += th;
        smallest = std::min(smallest, th);
        ++m;
      }
      const double value = theta(a);
      double measure = 0.0;
      if (value >= prod) {
        const double denom = smallest - prod;
        if (denom >= kDegenerate) measure = (value - prod) / denom;
      } else {
        const double denom = prod - std::max(sum - m + 1.0, 0.0);
        if (denom >= kDegenerate) measure = (value - prod) / denom;
      }
      draws[q++ * nsim + k] = std::clamp(measure, -1.0, 1.0);
    }
  }

  InferenceReport report{n, nsim, probint, {}, {}, {}};
  std::size_t q = 0;
  for (std::size_t i = 0; i < size; ++i)
    report.probabilities.push_back(summarize(static_cast<std::uint32_t>(i),
                                             std::span(draws).subspan(q++ * nsim, nsim), probint));
  for (Mask a : param_masks)
    report.params.push_back(summarize(a, std::span(draws).subspan(q++ * nsim, nsim), probint));
  for (Mask a : measure_masks)
    report.measures.push_back(summarize(a, std::span(draws).subspan(q++ * nsim, nsim), probint));
  return report;
}

InferenceReport infer(const SampleMatrix& data, double prior, std::size_t nsim, double probint,
                      SeedSpec seed) {
  return infer_from_counts(counts(data), prior, nsim, probint, seed);
}

CoverageReport coverage_study(const ProbabilityTable& truth, std::size_t m, std::size_t reps,
                              double prior, std::size_t nsim, double probint, SeedSpec seed) {
  if (reps == 0) throw DomainError("coverage study needs at least one replication");
  if (m == 0) throw DomainError("sample size must be at least 1");
  const int n = truth.dim();
  const DependenceParams true_params = DependenceParams::from_table(truth);
  const DependenceMeasures true_measures(true_params);
  const auto param_masks = subsets_by_report_order(n, 1);
  const auto measure_masks = subsets_by_report_order(n, 2);

  std::vector<std::size_t> prob_hits(truth.size(), 0);
  std::vector<std::size_t> param_hits(param_masks.size(), 0);
  std::vector<std::size_t> measure_hits(measure_masks.size(), 0);

  for (std::size_t r = 0; r < reps; ++r) {
    const SeedSpec sim_seed{seed.master_seed, seed.stream_id + 2 * r};
    const SeedSpec infer_seed{seed.master_seed, seed.stream_id + 2 * r + 1};
    const SampleMatrix data = simulate(truth, m, sim_seed);
    const InferenceReport rep = infer(data, prior, nsim, probint, infer_seed);
    for (std::size_t i = 0; i < truth.size(); ++i) {
      const auto& row = rep.probabilities[i];
      if (row.lower <= truth.at(i) && truth.at(i) <= row.upper) ++prob_hits[i];
    }
    for (std::size_t j = 0; j < param_masks.size(); ++j) {
      const auto& row = rep.params[j];
      const double v = true_params.at(param_masks[j]);
      if (row.lower <= v && v <= row.upper) ++param_hits[j];
    }
    for (std::size_t j = 0; j < measure_masks.size(); ++j) {
      const auto& row = rep.measures[j];
      const double v = true_measures.at(measure_masks[j]);
      if (row.lower <= v && v <= row.upper) ++measure_hits[j];
    }
  }

  CoverageReport out{n, reps, {}, {}, {}};
  const double denom = static_cast<double>(reps);
  for (std::size_t i = 0; i < prob_hits.size(); ++i)
    out.probabilities.emplace_back(static_cast<std::uint32_t>(i),
                                   static_cast<double>(prob_hits[i]) / denom);
  for (std::size_t j = 0; j < param_masks.size(); ++j)
    out.params.emplace_back(param_masks[j], static_cast<double>(param_hits[j]) / denom);
  for (std::size_t j = 0; j < measure_masks.size(); ++j)
    out.measures.emplace_back(measure_masks[j], static_cast<double>(measure_hits[j]) / denom);
  return out;
}

double rule_accuracy(const ProbabilityTable& model, const SampleMatrix& data, int target,
                     Mask given, std::size_t nsim, SeedSpec seed) {
  const int n = model.dim();
  if (data.dim() != n) throw DomainError("data and model dimensions differ");
  if (target < 1 || target > n) throw DomainError("target variable out of range");
  const Mask target_bit = Mask{1} << (n - target);
  if (given & target_bit) throw DomainError("target variable cannot condition itself");
  if (given > full_mask(n)) throw DomainError("conditioning subset out of range");
  if (data.rows() == 0) throw DomainError("rule accuracy needs at least one observation");
  if (nsim == 0) throw DomainError("nsim must be at least 1");

  // Conditional P(target = 1 | observed given-pattern), one probability per
  // distinct pattern actually present in the data.
  const auto given_vars = vars_of_mask(n, given);
  std::unordered_map<std::uint32_t, double> q_by_pattern;
  std::vector<double> q_row(data.rows());
  std::vector<int> observed(data.rows());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    observed[r] = data.cell(r, target);
    const std::uint32_t bits = data.row_bits(r) & given;
    auto it = q_by_pattern.find(bits);
    if (it == q_by_pattern.end()) {
      double q;
      if (given == 0) {
        q = model.marginal(target_bit).at(1);
      } else {
        std::vector<int> values;
        values.reserve(given_vars.size());
        for (int v : given_vars) values.push_back((bits >> (n - v)) & 1u);
        q = model.conditional(target_bit, given, values).at(1);
      }
      it = q_by_pattern.emplace(bits, q).first;
    }
    q_row[r] = it->second;
  }

  Rng rng(seed);
  double total = 0.0;
  for (std::size_t k = 0; k < nsim; ++k) {
    std::size_t matches = 0;
    for (std::size_t r = 0; r < data.rows(); ++r) {
      const int predicted = rng.next_unit() < q_row[r] ? 1 : 0;
      matches += predicted == observed[r];
    }
    total += static_cast<double>(matches) / static_cast<double>(data.rows());
  }
  return total / static_cast<double>(nsim);
}

}  // namespace mber
