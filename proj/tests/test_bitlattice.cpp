#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "mber/bitlattice.hpp"
#include "mber/errors.hpp"
#include "mber/rng.hpp"

using namespace mber;

namespace {

// O(4^n) reference: direct subset sums, no transform tricks.
std::vector<double> naive_subset_sums(int n, const std::vector<double>& f) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> g(size, 0.0);
  for (std::size_t t = 0; t < size; ++t)
    for (std::size_t s = 0; s < size; ++s)
      if ((s & t) == s) g[t] += f[s];
  return g;
}

std::vector<double> random_cells(int n, Rng& rng) {
  std::vector<double> f(std::size_t{1} << n);
  for (double& v : f) v = rng.next_unit();
  return f;
}

}  // namespace

TEST_CASE("rank and pattern are a 1-based bijection") {
  CHECK(pattern_of_rank(3, 1) == std::vector<int>{0, 0, 0});
  CHECK(pattern_of_rank(3, 2) == std::vector<int>{0, 0, 1});
  CHECK(pattern_of_rank(3, 5) == std::vector<int>{1, 0, 0});
  CHECK(pattern_of_rank(3, 8) == std::vector<int>{1, 1, 1});
  for (int n : {1, 2, 3, 6, 11}) {
    for (std::uint64_t r = 1; r <= table_size(n); ++r) {
      const auto bits = pattern_of_rank(n, r);
      CHECK(rank_of_pattern(bits) == r);
      CHECK(bits_of_pattern(bits) == r - 1);
    }
  }
  CHECK_THROWS_AS(pattern_of_rank(3, 0), DomainError);
  CHECK_THROWS_AS(pattern_of_rank(3, 9), DomainError);
  CHECK_THROWS_AS(check_dim(0), DomainError);
  CHECK_THROWS_AS(check_dim(kMaxDim + 1), DomainError);
  const std::vector<int> bad{0, 2, 1};
  CHECK_THROWS_AS(rank_of_pattern(bad), DomainError);
}

TEST_CASE("variable subsets map to masks with variable 1 in the MSB") {
  const std::vector<int> v1{1};
  const std::vector<int> v3{3};
  const std::vector<int> v13{1, 3};
  CHECK(mask_of_vars(3, v1) == 0b100);
  CHECK(mask_of_vars(3, v3) == 0b001);
  CHECK(mask_of_vars(3, v13) == 0b101);
  CHECK(vars_of_mask(3, 0b101) == std::vector<int>{1, 3});
  CHECK(subset_label(3, 0b101) == "{1,3}");
  CHECK(pattern_label(3, 0b011) == "(0,1,1)");
  CHECK(mask_card(0b101) == 2);
  const std::vector<int> dup{2, 2};
  CHECK_THROWS_AS(mask_of_vars(3, dup), DomainError);
  const std::vector<int> out_of_range{4};
  CHECK_THROWS_AS(mask_of_vars(3, out_of_range), DomainError);
}

TEST_CASE("report order is decreasing cardinality, largest element last") {
  const auto all3 = subsets_by_report_order(3, 1);
  const std::vector<Mask> expected3{0b111, 0b110, 0b101, 0b011, 0b100, 0b010, 0b001};
  CHECK(all3 == expected3);

  const auto pairs4 = subsets_by_report_order(4, 2);
  const std::vector<Mask> expected4{
      0b1111,                                           // {1,2,3,4}
      0b1110, 0b1101, 0b1011, 0b0111,                   // {1,2,3} {1,2,4} {1,3,4} {2,3,4}
      0b1100, 0b1010, 0b0110, 0b1001, 0b0101, 0b0011};  // {1,2} {1,3} {2,3} {1,4} {2,4} {3,4}
  CHECK(pairs4 == expected4);

  CHECK(subsets_by_report_order(2, 0).back() == 0u);  // empty set last
  CHECK(subsets_by_report_order(3, 4).empty());       // no subsets that large
  CHECK_THROWS_AS(subsets_by_report_order(3, -1), DomainError);
}

TEST_CASE("zeta transform equals naive subset sums") {
  Rng rng(SeedSpec{7, 0});
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto f = random_cells(n, rng);
      const auto fast = zeta_transform(n, f);
      const auto slow = naive_subset_sums(n, f);
      for (std::size_t t = 0; t < fast.size(); ++t)
        CHECK(std::abs(fast[t] - slow[t]) <= 1e-12);
    }
  }
}

TEST_CASE("zeta of a known table") {
  // cells 0.2 0.3 0.1 0.4 accumulate to 0.2 0.5 0.3 1.0 over the lattice
  const auto g = zeta_transform(2, {0.2, 0.3, 0.1, 0.4});
  CHECK(g[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(g[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g[2] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(g[3] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mobius transform inverts zeta") {
  Rng rng(SeedSpec{11, 0});
  for (int n : {1, 3, 5, 9}) {
    const auto f = random_cells(n, rng);
    auto g = zeta_transform(n, f);
    mobius_transform_inplace(n, g);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(g[i] - f[i]) <= 1e-12);
  }
  std::vector<double> wrong(5, 0.0);
  CHECK_THROWS_AS(zeta_transform_inplace(2, wrong), DomainError);
}
