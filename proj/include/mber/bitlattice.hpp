#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mber {

// Everything in this library indexes the 2^n cells of an n-variable binary
// table by the integer whose n-bit binary expansion is the cell's pattern,
// with variable 1 in the most significant bit. Ranks are 1-based, so
// rank r <-> pattern bits (r - 1). Subsets of {1..n} use the same layout:
// variable k occupies bit (n - k).

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 24;  // 2^24 doubles = 128 MiB, the largest table kept in memory

// Throws DomainError unless 1 <= n <= kMaxDim; returns n.
int check_dim(int n);

std::size_t table_size(int n);  // 2^n
Mask full_mask(int n);

std::vector<int> pattern_of_rank(int n, std::uint64_t rank);
std::uint64_t rank_of_pattern(std::span<const int> bits);

// Pattern cells as packed bits (variable 1 = MSB), the table index.
Mask bits_of_pattern(std::span<const int> bits);
std::vector<int> pattern_of_bits(int n, Mask bits);
std::string pattern_label(int n, Mask bits);  // "(0,1,1)"

// Subset of variables {1..n} <-> mask.
Mask mask_of_vars(int n, std::span<const int> vars);
std::vector<int> vars_of_mask(int n, Mask a);
std::string subset_label(int n, Mask a);  // "{1,3}"
int mask_card(Mask a);

// Subset enumeration used by every report: decreasing cardinality, and
// within one cardinality the order in which sets appear when the largest
// element grows last ({1,2}, {1,3}, {2,3}, {1,4}, ...). min_card filters
// out the small sets (1 keeps singletons, 2 keeps pairs and up).
std::vector<Mask> subsets_by_report_order(int n, int min_card);

// Fast zeta transform over the subset lattice: g[t] = sum of f[s] for s
// subset of t. mobius_transform_inplace inverts it exactly. Both are the
// usual n * 2^n bit-at-a-time passes.
void zeta_transform_inplace(int n, std::span<double> values);
void mobius_transform_inplace(int n, std::span<double> values);

std::vector<double> zeta_transform(int n, std::vector<double> values);
std::vector<double> mobius_transform(int n, std::vector<double> values);

}  // namespace mber
