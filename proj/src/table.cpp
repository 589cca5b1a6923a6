#include "mber/table.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mber/errors.hpp"

namespace mber {

namespace {

std::string offending_cells(int n, const std::vector<std::size_t>& bad,
                            const std::vector<double>& cells) {
  std::string msg;
  const std::size_t shown = std::min<std::size_t>(bad.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) msg += ", ";
    msg += "p" + pattern_label(n, static_cast<Mask>(bad[i])) + "=" + std::to_string(cells[bad[i]]);
  }
  if (bad.size() > shown) msg += ", and " + std::to_string(bad.size() - shown) + " more";
  return msg;
}

}  // namespace

ProbabilityTable::ProbabilityTable(int n, std::vector<double> cells)
    : n_(check_dim(n)), cells_(std::move(cells)) {
  if (cells_.size() != table_size(n_))
    throw ValidationError("table for dimension " + std::to_string(n_) + " needs " +
                          std::to_string(table_size(n_)) + " cells, got " +
                          std::to_string(cells_.size()));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!(cells_[i] >= 0.0 && cells_[i] <= 1.0)) bad.push_back(i);  // also catches NaN
  if (!bad.empty())
    throw ValidationError("table cells outside [0,1]: " + offending_cells(n_, bad, cells_));
  const double sum = std::accumulate(cells_.begin(), cells_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw ValidationError("table cells sum to " + std::to_string(sum) + ", expected 1");
}

double ProbabilityTable::at(std::size_t pattern_bits) const {
  if (pattern_bits >= cells_.size()) throw DomainError("pattern index out of range");
  return cells_[pattern_bits];
}

ProbabilityTable ProbabilityTable::marginal(Mask keep) const {
  if (keep == 0) throw DomainError("marginal needs at least one variable");
  const auto vars = vars_of_mask(n_, keep);  // validates range
  const int m = static_cast<int>(vars.size());
  std::vector<double> out(table_size(m), 0.0);
  for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
    std::size_t sub = 0;
    for (int v : vars) sub = (sub << 1) | ((idx >> (n_ - v)) & 1u);
    out[sub] += cells_[idx];
  }
  return ProbabilityTable(m, std::move(out));
}

ProbabilityTable ProbabilityTable::conditional(Mask targets, Mask given,
                                               std::span<const int> values) const {
  if (targets == 0) throw DomainError("conditional needs at least one target variable");
  if (given == 0) throw DomainError("conditional needs at least one conditioning variable");
  const auto target_vars = vars_of_mask(n_, targets);
  const auto given_vars = vars_of_mask(n_, given);
  if (targets & given) throw DomainError("target and conditioning variables overlap");
  if (values.size() != given_vars.size())
    throw DomainError("expected " + std::to_string(given_vars.size()) +
                      " conditioning values, got " + std::to_string(values.size()));

  Mask given_bits = 0;
  for (std::size_t i = 0; i < given_vars.size(); ++i) {
    if (values[i] != 0 && values[i] != 1)
      throw DomainError("conditioning values must be 0 or 1");
    if (values[i]) given_bits |= Mask{1} << (n_ - given_vars[i]);
  }

  const int m = static_cast<int>(target_vars.size());
  std::vector<double> out(table_size(m), 0.0);
  double total = 0.0;
  for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
    if ((static_cast<Mask>(idx) & given) != given_bits) continue;
    std::size_t sub = 0;
    for (int v : target_vars) sub = (sub << 1) | ((idx >> (n_ - v)) & 1u);
    out[sub] += cells_[idx];
    total += cells_[idx];
  }
  if (total <= 0.0) {
    std::string event;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) event += ',';
      event += static_cast<char>('0' + values[i]);
    }
    throw DomainError("conditioning event " + subset_label(n_, given) + "=" + event +
                      " has zero probability");
  }
  for (double& v : out) v /= total;
  return ProbabilityTable(m, std::move(out));
}

}  // namespace mber
