#include "mber/bitlattice.hpp"

#include <algorithm>
#include <bit>

#include "mber/errors.hpp"

namespace mber {

int check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw DomainError("dimension must be between 1 and " + std::to_string(kMaxDim) +
                      ", got " + std::to_string(n));
  return n;
}

std::size_t table_size(int n) { return std::size_t{1} << check_dim(n); }

Mask full_mask(int n) { return static_cast<Mask>(table_size(n) - 1); }

std::vector<int> pattern_of_rank(int n, std::uint64_t rank) {
  check_dim(n);
  if (rank < 1 || rank > table_size(n))
    throw DomainError("rank " + std::to_string(rank) + " out of range for dimension " +
                      std::to_string(n));
  return pattern_of_bits(n, static_cast<Mask>(rank - 1));
}

std::uint64_t rank_of_pattern(std::span<const int> bits) {
  return std::uint64_t{bits_of_pattern(bits)} + 1;
}

Mask bits_of_pattern(std::span<const int> bits) {
  check_dim(static_cast<int>(bits.size()));
  Mask value = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("pattern cells must be 0 or 1, got " + std::to_string(b));
    value = (value << 1) | static_cast<Mask>(b);
  }
  return value;
}

std::vector<int> pattern_of_bits(int n, Mask bits) {
  check_dim(n);
  if (bits > full_mask(n)) throw DomainError("pattern index out of range");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = (bits >> (n - 1 - k)) & 1u;
  return out;
}

std::string pattern_label(int n, Mask bits) {
  const auto cells = pattern_of_bits(n, bits);
  std::string out = "(";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + cells[i]);
  }
  out += ')';
  return out;
}

Mask mask_of_vars(int n, std::span<const int> vars) {
  check_dim(n);
  Mask a = 0;
  for (int v : vars) {
    if (v < 1 || v > n)
      throw DomainError("variable index " + std::to_string(v) + " out of range 1.." +
                        std::to_string(n));
    const Mask bit = Mask{1} << (n - v);
    if (a & bit) throw DomainError("variable index " + std::to_string(v) + " repeated");
    a |= bit;
  }
  return a;
}

std::vector<int> vars_of_mask(int n, Mask a) {
  check_dim(n);
  if (a > full_mask(n)) throw DomainError("subset mask out of range");
  std::vector<int> vars;
  for (int v = 1; v <= n; ++v)
    if (a & (Mask{1} << (n - v))) vars.push_back(v);
  return vars;
}

std::string subset_label(int n, Mask a) {
  const auto vars = vars_of_mask(n, a);
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vars[i]);
  }
  out += '}';
  return out;
}

int mask_card(Mask a) { return std::popcount(a); }

namespace {

// Reverse the low n bits, mapping between the report's "largest element
// grows last" counting order and the internal variable-1-is-MSB layout.
Mask reverse_mask(int n, Mask a) {
  Mask out = 0;
  for (int k = 0; k < n; ++k)
    if (a & (Mask{1} << k)) out |= Mask{1} << (n - 1 - k);
  return out;
}

}  // namespace

std::vector<Mask> subsets_by_report_order(int n, int min_card) {
  check_dim(n);
  if (min_card < 0) throw DomainError("min_card out of range");
  // min_card above n is fine: a univariate table simply has no pairs.
  std::vector<std::vector<Mask>> by_card(static_cast<std::size_t>(n) + 1);
  const Mask full = full_mask(n);
  for (Mask counter = 0;; ++counter) {
    const int c = mask_card(counter);
    if (c >= min_card) by_card[static_cast<std::size_t>(c)].push_back(reverse_mask(n, counter));
    if (counter == full) break;
  }
  std::vector<Mask> out;
  out.reserve(table_size(n));
  for (int c = n; c >= min_card; --c)
    out.insert(out.end(), by_card[static_cast<std::size_t>(c)].begin(),
               by_card[static_cast<std::size_t>(c)].end());
  return out;
}

namespace {

void check_lattice_buffer(int n, std::size_t size) {
  check_dim(n);
  if (size != table_size(n))
    throw DomainError("lattice buffer has " + std::to_string(size) + " entries, expected 2^" +
                      std::to_string(n));
}

}  // namespace

void zeta_transform_inplace(int n, std::span<double> values) {
  check_lattice_buffer(n, values.size());
  const std::size_t size = values.size();
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t t = 0; t < size; ++t)
      if (t & step) values[t] += values[t ^ step];
  }
}

void mobius_transform_inplace(int n, std::span<double> values) {
  check_lattice_buffer(n, values.size());
  const std::size_t size = values.size();
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t t = 0; t < size; ++t)
      if (t & step) values[t] -= values[t ^ step];
  }
}

std::vector<double> zeta_transform(int n, std::vector<double> values) {
  zeta_transform_inplace(n, values);
  return values;
}

std::vector<double> mobius_transform(int n, std::vector<double> values) {
  mobius_transform_inplace(n, values);
  return values;
}

}  // namespace mber
