#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mber/rng.hpp"
#include "mber/table.hpp"

namespace mber {

// m observations of n binary variables, each row stored as packed pattern
// bits (variable 1 = MSB).
class SampleMatrix {
 public:
  SampleMatrix(int n, std::vector<std::uint32_t> rows);

  int dim() const { return n_; }
  std::size_t rows() const { return rows_.size(); }
  std::uint32_t row_bits(std::size_t row) const;
  int cell(std::size_t row, int var) const;  // var is 1-based

  // Column subset, variables relabelled in ascending original order.
  SampleMatrix select(Mask keep) const;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

// m independent draws by inversion of the cumulative cell probabilities,
// consuming exactly one uniform per row.
SampleMatrix simulate(const ProbabilityTable& table, std::size_t m, SeedSpec seed);

// One draw from the Dirichlet with the given concentration parameters:
// normalized independent gammas.
std::vector<double> dirichlet_draw(std::span<const double> alphas, Rng& rng);
std::vector<double> dirichlet_draw(std::span<const double> alphas, SeedSpec seed);

// Relative frequencies of the observed patterns.
ProbabilityTable empirical_table(const SampleMatrix& data);

}  // namespace mber
