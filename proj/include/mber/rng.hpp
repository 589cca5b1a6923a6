#pragma once

#include <cstdint>

namespace mber {

// Reproducible stream selector: the master seed names the experiment, the
// stream id separates independent generators inside it (one per replicate,
// one per phase, ...). Equal specs give bit-identical streams on every
// platform.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

// xoshiro256++ with a splitmix64-filled state. Produces exactly the same
// sequence everywhere; no <random> distributions are involved anywhere so
// results cannot drift across standard libraries.
class Rng {
 public:
  explicit Rng(SeedSpec seed);

  std::uint64_t next_u64();
  double next_unit();    // uniform on the open interval (0,1)
  double next_normal();  // standard normal, Marsaglia polar method
  // Marsaglia & Tsang (2000) squeeze method; shapes below 1 use the
  // boosting identity G(a) = G(a+1) * U^(1/a).
  double next_gamma(double shape);

 private:
  std::uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mber
