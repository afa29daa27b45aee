#pragma once

#include <cstdint>

#include "rmhd/eos.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

/// Counter-based generator (splitmix64 over seed+counter): identical streams
/// on every platform and thread layout, so property suites and CSV outputs are
/// reproducible from the recorded seed alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  double uniform();  ///< [0, 1)
  double uniform(double a, double b);
  double normal();   ///< standard normal (Box-Muller)
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t ctr_ = 0;
};

struct SampleOptions {
  double p_min = 0.2, p_max = 3.0;
  double S_min = -1.0, S_max = 1.0;
  double v_max = 0.9;   ///< cap on |v| (kept below 1 - nu)
  double H_max = 2.0;
  bool planar = true;
};

/// Random state passing hyperbolicity_report for the given params.
PrimitiveState sample_admissible_state(CounterRng& rng, const ThermoParams& par,
                                       const SampleOptions& opts = {});

/// A contact pair: common (p, v, H), jumping entropy, with front slopes such
/// that sigma = v_n and |H_N| >= kappa.
struct ContactSample {
  PrimitiveState left, right;
  double d2phi = 0.0;
  double dtphi = 0.0;  ///< equals v_N of the common trace
};
ContactSample sample_contact_pair(CounterRng& rng, const ThermoParams& par,
                                  const SampleOptions& opts = {});

}  // namespace rmhd
