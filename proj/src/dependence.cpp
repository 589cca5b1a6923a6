#include "mber/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mber/errors.hpp"

namespace mber {

namespace {

// Denominators below this are treated as degenerate and give measure 0.
constexpr double kDegenerate = 1e-12;

void check_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0))
    throw DomainError(std::string(name) + " must lie strictly between 0 and 1, got " +
                      std::to_string(value));
}

}  // namespace

DependenceParams DependenceParams::from_table(const ProbabilityTable& table) {
  const int n = table.dim();
  std::vector<double> zeta = zeta_transform(n, table.values());
  const Mask full = full_mask(n);
  std::vector<double> values(table.size());
  values[0] = 1.0;
  for (Mask a = 1; a <= full; ++a) values[a] = zeta[full ^ a];
  return DependenceParams(n, std::move(values));
}

DependenceParams DependenceParams::from_values(int n, std::vector<double> values) {
  check_dim(n);
  if (values.size() != table_size(n))
    throw ValidationError("parameter lattice for dimension " + std::to_string(n) + " needs " +
                          std::to_string(table_size(n)) + " values, got " +
                          std::to_string(values.size()));
  if (std::abs(values[0] - 1.0) > 1e-9)
    throw ValidationError("the empty-set parameter must be 1, got " + std::to_string(values[0]));
  values[0] = 1.0;
  for (std::size_t a = 1; a < values.size(); ++a)
    if (!(values[a] >= 0.0 && values[a] <= 1.0))
      throw ValidationError("parameter for " + subset_label(n, static_cast<Mask>(a)) +
                            " outside [0,1]: " + std::to_string(values[a]));
  return DependenceParams(n, std::move(values));
}

double DependenceParams::at(Mask a) const {
  if (a >= values_.size()) throw DomainError("subset mask out of range");
  return values_[a];
}

double DependenceParams::singleton(int var) const {
  if (var < 1 || var > n_) throw DomainError("variable index out of range");
  return values_[Mask{1} << (n_ - var)];
}

DependenceParams dependence_params(const ProbabilityTable& table) {
  return DependenceParams::from_table(table);
}

FrechetBounds frechet_bounds(int n, std::span<const double> singletons, Mask a) {
  check_dim(n);
  if (singletons.size() != static_cast<std::size_t>(n))
    throw DomainError("expected one singleton parameter per variable");
  if (a == 0 || a > full_mask(n)) throw DomainError("subset must be non-empty and within range");
  double sum = 0.0;
  double smallest = 1.0;
  int m = 0;
  for (int v = 1; v <= n; ++v) {
    if (!(a & (Mask{1} << (n - v)))) continue;
    const double th = singletons[static_cast<std::size_t>(v - 1)];
    if (!(th >= 0.0 && th <= 1.0))
      throw DomainError("singleton parameter for variable " + std::to_string(v) +
                        " outside [0,1]");
    sum += th;
    smallest = std::min(smallest, th);
    ++m;
  }
  return FrechetBounds{std::max(sum - m + 1.0, 0.0), smallest};
}

FrechetBounds frechet_bounds(const DependenceParams& params, Mask a) {
  std::vector<double> singletons(static_cast<std::size_t>(params.dim()));
  for (int v = 1; v <= params.dim(); ++v)
    singletons[static_cast<std::size_t>(v - 1)] = params.singleton(v);
  return frechet_bounds(params.dim(), singletons, a);
}

double dependence_measure(const DependenceParams& params, Mask a) {
  if (mask_card(a) < 2)
    throw DomainError("dependence measure needs a subset of at least two variables");
  const FrechetBounds bounds = frechet_bounds(params, a);
  double prod = 1.0;
  for (int v : vars_of_mask(params.dim(), a)) prod *= params.singleton(v);
  const double value = params.at(a);
  double measure;
  if (value >= prod) {
    const double denom = bounds.upper - prod;
    measure = denom < kDegenerate ? 0.0 : (value - prod) / denom;
  } else {
    const double denom = prod - bounds.lower;
    measure = denom < kDegenerate ? 0.0 : (value - prod) / denom;
  }
  return std::clamp(measure, -1.0, 1.0);
}

DependenceMeasures::DependenceMeasures(const DependenceParams& params)
    : n_(params.dim()), by_mask_(table_size(params.dim()), 0.0) {
  for (Mask a : subsets_by_report_order(n_, 2)) {
    const double value = dependence_measure(params, a);
    rows_.emplace_back(a, value);
    by_mask_[a] = value;
  }
}

double DependenceMeasures::at(Mask a) const {
  if (mask_card(a) < 2 || a >= by_mask_.size())
    throw DomainError("dependence measure defined for subsets of two or more variables");
  return by_mask_[a];
}

DependenceMeasures dependence_measures(const DependenceParams& params) {
  return DependenceMeasures(params);
}

double subcopula_eval(const DependenceParams& params, std::span<const double> u) {
  const int n = params.dim();
  if (u.size() != static_cast<std::size_t>(n))
    throw DomainError("subcopula point needs one coordinate per variable");
  Mask a = 0;
  bool grounded = false;
  for (int v = 1; v <= n; ++v) {
    const double coord = u[static_cast<std::size_t>(v - 1)];
    if (coord == 0.0)
      grounded = true;
    else if (coord == 1.0)
      ;  // variable drops out
    else if (coord == params.singleton(v))
      a |= Mask{1} << (n - v);
    else
      throw DomainError("coordinate " + std::to_string(v) +
                        " must be 0, 1 or that variable's singleton parameter");
  }
  if (grounded) return 0.0;
  return params.at(a);
}

double bivariate_deviation(double th1, double th2, double th12) {
  check_open_unit(th1, "first singleton parameter");
  check_open_unit(th2, "second singleton parameter");
  const FrechetBounds bounds = bivariate_admissible_interval(th1, th2);
  if (!(th12 >= bounds.lower && th12 <= bounds.upper))
    throw DomainError("pairwise parameter " + std::to_string(th12) +
                      " outside its admissible interval [" + std::to_string(bounds.lower) + ", " +
                      std::to_string(bounds.upper) + "]");
  const double us[3] = {0.0, th1, 1.0};
  const double vs[3] = {0.0, th2, 1.0};
  double sup_above = 0.0;  // sup(S - uv), attained at a grid point
  double sup_below = 0.0;  // sup(uv - S)
  for (double uu : us)
    for (double vv : vs) {
      double s;
      if (uu == 0.0 || vv == 0.0)
        s = 0.0;
      else if (uu == 1.0)
        s = vv;
      else if (vv == 1.0)
        s = uu;
      else
        s = th12;
      sup_above = std::max(sup_above, s - uu * vv);
      sup_below = std::max(sup_below, uu * vv - s);
    }
  return sup_above - sup_below;
}

FrechetBounds bivariate_admissible_interval(double th1, double th2) {
  if (!(th1 >= 0.0 && th1 <= 1.0) || !(th2 >= 0.0 && th2 <= 1.0))
    throw DomainError("singleton parameters must lie in [0,1]");
  return FrechetBounds{std::max(th1 + th2 - 1.0, 0.0), std::min(th1, th2)};
}

bool bivariate_admissible_region_contains(double th12, double th1, double th2) {
  check_open_unit(th12, "pairwise parameter");
  check_open_unit(th1, "first singleton parameter");
  check_open_unit(th2, "second singleton parameter");
  return th1 >= th12 && th2 >= th12 && th2 <= 1.0 - th1 + th12;
}

FrechetBounds trivariate_admissible_interval(double th1, double th2, double th3, double th12,
                                             double th13, double th23) {
  check_open_unit(th1, "first singleton parameter");
  check_open_unit(th2, "second singleton parameter");
  check_open_unit(th3, "third singleton parameter");
  const struct {
    double value;
    double a, b;
    const char* name;
  } pairs[] = {{th12, th1, th2, "{1,2}"}, {th13, th1, th3, "{1,3}"}, {th23, th2, th3, "{2,3}"}};
  for (const auto& p : pairs) {
    const FrechetBounds b = bivariate_admissible_interval(p.a, p.b);
    if (!(p.value >= b.lower && p.value <= b.upper))
      throw DomainError("pairwise parameter for " + std::string(p.name) +
                        " outside its admissible interval");
  }

  // Each cell probability is affine in the triple parameter t with slope +1
  // or -1; both p >= 0 and p <= 1 restrict t.
  const struct {
    double offset;
    int slope;
  } cells[] = {
      {0.0, +1},                                     // p(0,0,0) = t
      {th12, -1},                                    // p(0,0,1) = th12 - t
      {th13, -1},                                    // p(0,1,0)
      {th1 - th12 - th13, +1},                       // p(0,1,1)
      {th23, -1},                                    // p(1,0,0)
      {th2 - th12 - th23, +1},                       // p(1,0,1)
      {th3 - th13 - th23, +1},                       // p(1,1,0)
      {1.0 - th1 - th2 - th3 + th12 + th13 + th23, -1},  // p(1,1,1)
  };
  double lower = 0.0;
  double upper = 1.0;
  for (const auto& c : cells) {
    if (c.slope > 0) {
      lower = std::max(lower, -c.offset);
      upper = std::min(upper, 1.0 - c.offset);
    } else {
      lower = std::max(lower, c.offset - 1.0);
      upper = std::min(upper, c.offset);
    }
  }
  if (lower > upper)
    throw IncompatibilityError("no triple-zero probability is compatible: interval [" +
                               std::to_string(lower) + ", " + std::to_string(upper) +
                               "] is empty");
  return FrechetBounds{lower, upper};
}

}  // namespace mber
