#include "rmhd/rng.hpp"

#include <cmath>

namespace rmhd {

std::uint64_t CounterRng::next_u64() {
  std::uint64_t z = seed_ + (ctr_++ + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double CounterRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

PrimitiveState sample_admissible_state(CounterRng& rng, const ThermoParams& par,
                                       const SampleOptions& opts) {
  PrimitiveState st;
  st.p = rng.uniform(std::max(opts.p_min, par.pbar), opts.p_max);
  st.S = rng.uniform(opts.S_min, opts.S_max);
  const double vmax = std::min(opts.v_max, 1.0 - par.nu);
  const double vmag = rng.uniform(0.0, vmax);
  const double th = rng.uniform(0.0, 6.283185307179586);
  if (opts.planar) {
    st.v = Vec3(vmag * std::cos(th), vmag * std::sin(th), 0.0);
    st.H = Vec3(rng.uniform(-opts.H_max, opts.H_max),
                rng.uniform(-opts.H_max, opts.H_max), 0.0);
  } else {
    const double ph = rng.uniform(0.0, 3.141592653589793);
    st.v = vmag * Vec3(std::sin(ph) * std::cos(th), std::sin(ph) * std::sin(th),
                       std::cos(ph));
    st.H = Vec3(rng.uniform(-opts.H_max, opts.H_max),
                rng.uniform(-opts.H_max, opts.H_max),
                rng.uniform(-opts.H_max, opts.H_max));
  }
  return st;
}

ContactSample sample_contact_pair(CounterRng& rng, const ThermoParams& par,
                                  const SampleOptions& opts) {
  for (;;) {
    ContactSample cs;
    cs.right = sample_admissible_state(rng, par, opts);
    cs.d2phi = rng.uniform(-0.6, 0.6);
    const double HN = cs.right.H[0] - cs.right.H[1] * cs.d2phi;
    if (std::abs(HN) < par.kappa) continue;  // resample: margin (mf.1)
    cs.dtphi = cs.right.v[0] - cs.right.v[1] * cs.d2phi;
    cs.left = cs.right;
    cs.left.S += (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.2, 1.0);
    return cs;
  }
}

}  // namespace rmhd
