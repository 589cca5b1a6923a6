#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mber/bitlattice.hpp"

namespace mber {

// Joint probability table of n binary variables, one cell per pattern,
// indexed by packed pattern bits (rank - 1). Construction validates that
// every cell lies in [0,1] and the cells sum to 1 within kSumTolerance.
class ProbabilityTable {
 public:
  static constexpr double kSumTolerance = 1e-9;

  ProbabilityTable(int n, std::vector<double> cells);

  int dim() const { return n_; }
  std::size_t size() const { return cells_.size(); }
  double at(std::size_t pattern_bits) const;
  const std::vector<double>& values() const { return cells_; }

  // Joint table of the kept variables, relabelled in ascending original
  // order. keep must be a non-empty subset of {1..n}.
  ProbabilityTable marginal(Mask keep) const;

  // Conditional joint table of the target variables given that each
  // variable in `given` takes the corresponding value (values follow
  // ascending variable order). Targets and given must be disjoint and
  // non-empty; a zero-probability conditioning event is a domain error.
  ProbabilityTable conditional(Mask targets, Mask given, std::span<const int> values) const;

 private:
  int n_;
  std::vector<double> cells_;
};

}  // namespace mber
