#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "csiloc/core/errors.hpp"

namespace csiloc::sim {

/// One CSI fingerprint: complex channel gain per (antenna, subcarrier),
/// stored antenna-major. Simulator math is double precision throughout.
struct ChannelSnapshot {
  int n_antennas = 0;
  int n_subcarriers = 0;
  std::vector<std::complex<double>> values;  // [antenna][subcarrier]
  double snr_db = std::numeric_limits<double>::infinity();  // noise tag; +inf = clean
  int day_index = 0;
  bool disturbed = false;

  ChannelSnapshot() = default;
  ChannelSnapshot(int n_ant, int n_sub)
      : n_antennas(n_ant),
        n_subcarriers(n_sub),
        values(static_cast<size_t>(n_ant) * n_sub) {}

  std::complex<double>& at(int m, int k) {
    return values[static_cast<size_t>(m) * n_subcarriers + k];
  }
  const std::complex<double>& at(int m, int k) const {
    return values[static_cast<size_t>(m) * n_subcarriers + k];
  }

  size_t size() const { return values.size(); }

  bool all_finite() const {
    for (const auto& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  /// Mean |h|^2 over all entries.
  double signal_power() const {
    double acc = 0.0;
    for (const auto& v : values) acc += std::norm(v);
    return values.empty() ? 0.0 : acc / static_cast<double>(values.size());
  }
};

/// Normalized correlation |<a, b>| / (||a|| * ||b||) between two snapshots.
inline double snapshot_correlation(const ChannelSnapshot& a, const ChannelSnapshot& b) {
  require(a.size() == b.size() && a.n_antennas == b.n_antennas,
          "snapshot shapes must match for correlation");
  std::complex<double> dot{0.0, 0.0};
  double na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * std::conj(b.values[i]);
    na += std::norm(a.values[i]);
    nb += std::norm(b.values[i]);
  }
  const double denom = std::sqrt(na) * std::sqrt(nb);
  return denom > 0.0 ? std::abs(dot) / denom : 0.0;
}

}  // namespace csiloc::sim
