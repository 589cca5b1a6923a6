#include <doctest.h>

#include <cmath>
#include <vector>

#include "mber/dependence.hpp"
#include "mber/errors.hpp"
#include "mber/rng.hpp"
#include "mber/table.hpp"

using namespace mber;

namespace {

ProbabilityTable example_table() {
  return ProbabilityTable(3, {0.15, 0.21, 0.21, 0.03, 0.21, 0.03, 0.03, 0.13});
}

// two-variable table determined by its three parameters
ProbabilityTable bivariate_table(double th1, double th2, double th12) {
  return ProbabilityTable(2, {th12, th1 - th12, th2 - th12, 1.0 - th1 - th2 + th12});
}

}  // namespace

TEST_CASE("running example: parameters of every order") {
  const auto params = DependenceParams::from_table(example_table());
  CHECK(params.at(0) == 1.0);
  for (int v : {1, 2, 3}) CHECK(params.singleton(v) == doctest::Approx(0.6).epsilon(1e-13));
  for (Mask a : {Mask{0b110}, Mask{0b101}, Mask{0b011}})
    CHECK(params.at(a) == doctest::Approx(0.36).epsilon(1e-13));
  CHECK(params.at(0b111) == doctest::Approx(0.15).epsilon(1e-13));
}

TEST_CASE("running example: pairwise independence but joint dependence") {
  const auto params = dependence_params(example_table());
  const DependenceMeasures measures(params);
  for (Mask a : {Mask{0b110}, Mask{0b101}, Mask{0b011}})
    CHECK(measures.at(a) == doctest::Approx(0.0).epsilon(1e-12));
  // 0.15 sits below the independence value 0.216 by 0.066 of the 0.216 gap
  CHECK(measures.at(0b111) == doctest::Approx(-0.066 / 0.216).epsilon(1e-12));
  CHECK(measures.rows().size() == 4);
  CHECK(measures.rows().front().first == 0b111);
  CHECK_THROWS_AS(measures.at(0b100), DomainError);
  CHECK_THROWS_AS(dependence_measure(params, 0b001), DomainError);
}

TEST_CASE("lattice values can be hypothetical until inverted") {
  // monotonicity violations are allowed here; only range and the empty set
  // are enforced
  CHECK_NOTHROW(DependenceParams::from_values(2, {1.0, 0.1, 0.1, 0.9}));
  CHECK_THROWS_AS(DependenceParams::from_values(2, {0.9, 0.1, 0.1, 0.05}), ValidationError);
  CHECK_THROWS_AS(DependenceParams::from_values(2, {1.0, -0.1, 0.1, 0.05}), ValidationError);
  CHECK_THROWS_AS(DependenceParams::from_values(2, {1.0, 0.1, 0.1}), ValidationError);
}

TEST_CASE("frechet bounds") {
  const std::vector<double> s{0.6, 0.6, 0.6};
  const auto full = frechet_bounds(3, s, 0b111);
  CHECK(full.lower == doctest::Approx(0.0));
  CHECK(full.upper == doctest::Approx(0.6));
  const auto pair = frechet_bounds(3, s, 0b110);
  CHECK(pair.lower == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(pair.upper == doctest::Approx(0.6));
  CHECK_THROWS_AS(frechet_bounds(3, s, 0), DomainError);
  const std::vector<double> bad{0.6, 1.2, 0.6};
  CHECK_THROWS_AS(frechet_bounds(3, bad, 0b111), DomainError);
}

TEST_CASE("extreme dependence in two variables") {
  // equal margins 1/2: the lower bound, independence, the upper bound
  const auto low = dependence_params(bivariate_table(0.5, 0.5, 0.0));
  const auto mid = dependence_params(bivariate_table(0.5, 0.5, 0.25));
  const auto third = dependence_params(bivariate_table(0.5, 0.5, 1.0 / 3.0));
  const auto high = dependence_params(bivariate_table(0.5, 0.5, 0.5));
  CHECK(dependence_measure(low, 0b11) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(dependence_measure(mid, 0b11) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(dependence_measure(third, 0b11) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(dependence_measure(high, 0b11) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("degenerate margins give measure zero") {
  // X1 constant 0: theta1 = 1, upper bound equals the product
  const auto params = dependence_params(ProbabilityTable(2, {0.3, 0.7, 0.0, 0.0}));
  CHECK(dependence_measure(params, 0b11) == 0.0);
}

TEST_CASE("subcopula on its grid") {
  const auto params = dependence_params(example_table());
  const std::vector<double> center{0.6, 0.6, 0.6};
  CHECK(subcopula_eval(params, center) == doctest::Approx(0.15).epsilon(1e-13));
  const std::vector<double> pair{0.6, 0.6, 1.0};
  CHECK(subcopula_eval(params, pair) == doctest::Approx(0.36).epsilon(1e-13));
  const std::vector<double> corner{1.0, 1.0, 1.0};
  CHECK(subcopula_eval(params, corner) == 1.0);
  const std::vector<double> grounded{0.0, 0.6, 0.6};
  CHECK(subcopula_eval(params, grounded) == 0.0);
  const std::vector<double> off_grid{0.6, 0.25, 0.6};
  CHECK_THROWS_AS(subcopula_eval(params, off_grid), DomainError);
  const std::vector<double> short_point{0.6, 0.6};
  CHECK_THROWS_AS(subcopula_eval(params, short_point), DomainError);
}

TEST_CASE("sup deviation equals the parameter gap and rebuilds the measure") {
  Rng rng(SeedSpec{21, 0});
  for (int rep = 0; rep < 200; ++rep) {
    const double th1 = 0.05 + 0.9 * rng.next_unit();
    const double th2 = 0.05 + 0.9 * rng.next_unit();
    const auto box = bivariate_admissible_interval(th1, th2);
    const double th12 = box.lower + (box.upper - box.lower) * rng.next_unit();
    const double dev = bivariate_deviation(th1, th2, th12);
    CHECK(std::abs(dev - (th12 - th1 * th2)) <= 1e-12);

    // normalizing the deviation by the matching extreme reproduces the measure
    const double prod = th1 * th2;
    double from_sup = 0.0;
    if (dev >= 0.0 && box.upper - prod >= 1e-12)
      from_sup = dev / (box.upper - prod);
    else if (dev < 0.0 && prod - box.lower >= 1e-12)
      from_sup = dev / (prod - box.lower);
    const auto params = dependence_params(bivariate_table(th1, th2, th12));
    CHECK(std::abs(from_sup - dependence_measure(params, 0b11)) <= 1e-12);
  }
  CHECK_THROWS_AS(bivariate_deviation(0.5, 0.5, 0.7), DomainError);
  CHECK_THROWS_AS(bivariate_deviation(0.0, 0.5, 0.2), DomainError);
}

TEST_CASE("admissible intervals and regions for pairs") {
  const auto a = bivariate_admissible_interval(0.6, 0.6);
  CHECK(a.lower == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(a.upper == doctest::Approx(0.6));
  const auto b = bivariate_admissible_interval(0.3, 0.4);
  CHECK(b.lower == 0.0);
  CHECK(b.upper == doctest::Approx(0.3));

  CHECK(bivariate_admissible_region_contains(0.36, 0.6, 0.6));
  CHECK(bivariate_admissible_region_contains(0.36, 0.36, 0.36));
  CHECK_FALSE(bivariate_admissible_region_contains(0.36, 0.3, 0.5));
  CHECK_FALSE(bivariate_admissible_region_contains(0.36, 0.6, 0.8));
  CHECK_THROWS_AS(bivariate_admissible_region_contains(0.0, 0.6, 0.6), DomainError);
}

TEST_CASE("admissible interval for the triple parameter") {
  const auto iv = trivariate_admissible_interval(0.6, 0.6, 0.6, 0.36, 0.36, 0.36);
  CHECK(iv.lower == doctest::Approx(0.12).epsilon(1e-13));
  CHECK(iv.upper == doctest::Approx(0.28).epsilon(1e-13));

  // impossible pairwise profile: each pair nearly disjoint zeros
  CHECK_THROWS_AS(trivariate_admissible_interval(0.6, 0.6, 0.6, 0.2, 0.2, 0.2),
                  IncompatibilityError);
  // pairwise value outside its own bounds is a domain error
  CHECK_THROWS_AS(trivariate_admissible_interval(0.6, 0.6, 0.6, 0.7, 0.36, 0.36), DomainError);
}
