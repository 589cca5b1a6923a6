#include "mber/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mber/errors.hpp"

namespace mber {

namespace {

constexpr double kCellSlack = 1e-9;

void check_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0))
    throw DomainError(std::string(name) + " must lie strictly between 0 and 1, got " +
                      std::to_string(value));
}

void check_measure(double value, const char* name) {
  if (!(value >= -1.0 && value <= 1.0))
    throw DomainError(std::string(name) + " must lie in [-1,1], got " + std::to_string(value));
}

}  // namespace

ProbabilityTable table_from_params(const DependenceParams& params) {
  const int n = params.dim();
  const std::size_t size = table_size(n);
  const Mask full = full_mask(n);
  std::vector<double> cells(size);
  // The subset-sum transform of the cells evaluates the parameter lattice at
  // the complementary mask, so inverting is one complement plus one Mobius
  // pass.
  for (std::size_t t = 0; t < size; ++t) cells[t] = params.at(full ^ static_cast<Mask>(t));
  mobius_transform_inplace(n, cells);
  for (std::size_t i = 0; i < size; ++i) {
    if (cells[i] < 0.0) {
      if (cells[i] < -kCellSlack)
        throw IncompatibilityError("parameters admit no joint distribution: cell p" +
                                   pattern_label(n, static_cast<Mask>(i)) + " = " +
                                   std::to_string(cells[i]));
      cells[i] = 0.0;
    } else if (cells[i] > 1.0) {
      if (cells[i] > 1.0 + kCellSlack)
        throw IncompatibilityError("parameters admit no joint distribution: cell p" +
                                   pattern_label(n, static_cast<Mask>(i)) + " = " +
                                   std::to_string(cells[i]));
      cells[i] = 1.0;
    }
  }
  return ProbabilityTable(n, std::move(cells));
}

LayeredBuild build_layered(int n, const std::vector<LayerCells>& layers) {
  check_dim(n);
  if (layers.size() > static_cast<std::size_t>(n))
    throw DomainError("at most " + std::to_string(n) + " layers (pattern weights 0.." +
                      std::to_string(n - 1) + ") may be given");
  const std::size_t size = table_size(n);
  std::vector<double> cells(size, 0.0);
  std::vector<bool> assigned(size, false);
  double running = 0.0;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    for (const auto& [bits, value] : layers[k]) {
      if (bits >= size)
        throw DomainError("layer " + std::to_string(k) + ": pattern index out of range");
      if (static_cast<std::size_t>(std::popcount(bits)) != k)
        throw DomainError("layer " + std::to_string(k) + ": pattern " +
                          pattern_label(n, bits) + " has " +
                          std::to_string(std::popcount(bits)) + " ones");
      if (assigned[bits])
        throw DomainError("layer " + std::to_string(k) + ": pattern " +
                          pattern_label(n, bits) + " assigned twice");
      if (!(value >= 0.0 && value <= 1.0))
        throw ValidationError("layer " + std::to_string(k) + ": probability for pattern " +
                              pattern_label(n, bits) + " outside [0,1]");
      assigned[bits] = true;
      cells[bits] = value;
      running += value;
    }
    if (running > 1.0 + 1e-12)
      throw ValidationError("layer " + std::to_string(k) + ": cumulative probability " +
                            std::to_string(running) + " exceeds 1");
  }
  cells[size - 1] = std::max(1.0 - running, 0.0);
  ProbabilityTable table(n, std::move(cells));
  DependenceParams params = DependenceParams::from_table(table);
  return LayeredBuild{std::move(table), std::move(params)};
}

double bivariate_param_from_measure(double th1, double th2, double mu) {
  check_open_unit(th1, "first singleton parameter");
  check_open_unit(th2, "second singleton parameter");
  check_measure(mu, "dependence measure");
  const double prod = th1 * th2;
  if (mu >= 0.0) return (std::min(th1, th2) - prod) * mu + prod;
  return (prod - std::max(th1 + th2 - 1.0, 0.0)) * mu + prod;
}

ProbabilityTable trivariate_from_measures(double th1, double th2, double th3, double mu12,
                                          double mu13, double mu23, double mu123) {
  check_open_unit(th1, "first singleton parameter");
  check_open_unit(th2, "second singleton parameter");
  check_open_unit(th3, "third singleton parameter");
  check_measure(mu123, "triple dependence measure");
  const double th12 = bivariate_param_from_measure(th1, th2, mu12);
  const double th13 = bivariate_param_from_measure(th1, th3, mu13);
  const double th23 = bivariate_param_from_measure(th2, th3, mu23);
  const double prod = th1 * th2 * th3;
  double th123;
  if (mu123 >= 0.0)
    th123 = (std::min({th1, th2, th3}) - prod) * mu123 + prod;
  else
    th123 = (prod - std::max(th1 + th2 + th3 - 2.0, 0.0)) * mu123 + prod;

  std::vector<double> values(8);
  values[0b000] = 1.0;
  values[0b001] = th3;
  values[0b010] = th2;
  values[0b011] = th23;
  values[0b100] = th1;
  values[0b101] = th13;
  values[0b110] = th12;
  values[0b111] = th123;
  return table_from_params(DependenceParams::from_values(3, std::move(values)));
}

}  // namespace mber
