#pragma once

#include "csiloc/core/errors.hpp"

namespace csiloc::sim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// OFDM numerology. Subcarrier k sits at the absolute frequency
/// carrier - bandwidth/2 + k * delta_f, k = 0 .. n_subcarriers-1.
struct OfdmConfig {
  int n_subcarriers = 1024;
  double bandwidth_hz = 20e6;
  double carrier_hz = 1.25e9;
  double guard_fraction = 0.10;
  double cp_fraction = 0.125;

  double delta_f() const { return bandwidth_hz / n_subcarriers; }
  double subcarrier_freq(int k) const {
    return carrier_hz - 0.5 * bandwidth_hz + k * delta_f();
  }
  double wavelength() const { return kSpeedOfLight / carrier_hz; }

  void validate() const {
    require(n_subcarriers >= 2, "need at least two subcarriers");
    require(bandwidth_hz > 0.0 && carrier_hz > 0.0, "bandwidth and carrier must be positive");
    require(guard_fraction >= 0.0 && guard_fraction < 1.0, "guard fraction must be in [0, 1)");
    require(cp_fraction >= 0.0 && cp_fraction < 1.0, "cp fraction must be in [0, 1)");
  }
};

}  // namespace csiloc::sim
