#include "mber/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mber/errors.hpp"

namespace mber {

SampleMatrix::SampleMatrix(int n, std::vector<std::uint32_t> rows)
    : n_(check_dim(n)), rows_(std::move(rows)) {
  const std::uint32_t full = full_mask(n_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r] > full)
      throw ValidationError("row " + std::to_string(r) + " does not fit " + std::to_string(n_) +
                            " binary variables");
}

std::uint32_t SampleMatrix::row_bits(std::size_t row) const {
  if (row >= rows_.size()) throw DomainError("row index out of range");
  return rows_[row];
}

int SampleMatrix::cell(std::size_t row, int var) const {
  if (var < 1 || var > n_) throw DomainError("variable index out of range");
  return (row_bits(row) >> (n_ - var)) & 1u;
}

SampleMatrix SampleMatrix::select(Mask keep) const {
  if (keep == 0) throw DomainError("column selection needs at least one variable");
  const auto vars = vars_of_mask(n_, keep);
  const int m = static_cast<int>(vars.size());
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (std::uint32_t bits : rows_) {
    std::uint32_t sub = 0;
    for (int v : vars) sub = (sub << 1) | ((bits >> (n_ - v)) & 1u);
    out.push_back(sub);
  }
  return SampleMatrix(m, std::move(out));
}

SampleMatrix simulate(const ProbabilityTable& table, std::size_t m, SeedSpec seed) {
  if (m == 0) throw DomainError("sample size must be at least 1");
  std::vector<double> cdf(table.size());
  std::partial_sum(table.values().begin(), table.values().end(), cdf.begin());
  Rng rng(seed);
  std::vector<std::uint32_t> rows;
  rows.reserve(m);
  const std::size_t last = cdf.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const double u = rng.next_unit();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = it == cdf.end() ? last : static_cast<std::size_t>(it - cdf.begin());
    rows.push_back(static_cast<std::uint32_t>(idx));
  }
  return SampleMatrix(table.dim(), std::move(rows));
}

std::vector<double> dirichlet_draw(std::span<const double> alphas, Rng& rng) {
  if (alphas.empty()) throw DomainError("Dirichlet needs at least one concentration parameter");
  for (double a : alphas)
    if (!(a > 0.0)) throw DomainError("Dirichlet concentration parameters must be positive");
  std::vector<double> out(alphas.size());
  for (;;) {
    double total = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      out[i] = rng.next_gamma(alphas[i]);
      total += out[i];
    }
    if (total > 0.0) {  // guards against full underflow at tiny shapes
      for (double& v : out) v /= total;
      return out;
    }
  }
}

std::vector<double> dirichlet_draw(std::span<const double> alphas, SeedSpec seed) {
  Rng rng(seed);
  return dirichlet_draw(alphas, rng);
}

ProbabilityTable empirical_table(const SampleMatrix& data) {
  if (data.rows() == 0) throw DomainError("empirical table needs at least one observation");
  std::vector<double> cells(table_size(data.dim()), 0.0);
  for (std::size_t r = 0; r < data.rows(); ++r) cells[data.row_bits(r)] += 1.0;
  const double m = static_cast<double>(data.rows());
  for (double& c : cells) c /= m;
  return ProbabilityTable(data.dim(), std::move(cells));
}

}  // namespace mber
