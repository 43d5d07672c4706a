#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "csiloc/sim/environment.hpp"
#include "csiloc/sim/snapshot.hpp"

namespace csiloc::sim {

// Geometric multipath model: a direct line-of-sight ray plus one single-bounce
// ray per scatterer. Free-space amplitude lambda/(4*pi*d) per leg, complex
// reflection gain per scatterer, exact geometric delays. A path delay tau
// shows up as the linear phase exp(-j*2*pi*f_k*tau) across subcarriers, which
// is the structure the positioning network learns.

namespace detail {

struct ResolvedPath {
  double delay_s = 0.0;
  std::complex<double> amplitude{0.0, 0.0};
};

/// Amplitude attenuation factor from pedestrians crossing one 2D leg.
inline double blockage_factor(const Environment& env, const Vec2& from, const Vec2& to) {
  double factor = 1.0;
  for (const auto& ped : env.pedestrians) {
    if (segments_intersect(from, to, ped.a, ped.b))
      factor *= std::pow(10.0, -ped.attenuation_db / 20.0);
  }
  return factor;
}

inline ResolvedPath resolve_los(const ArrayGeometry& array, const OfdmConfig& ofdm,
                                const Environment& env, const Vec3& ue, int m,
                                bool with_pedestrians) {
  const Vec3 ant = array.element_position(m);
  const double d = distance(ant, ue);
  ResolvedPath p;
  p.delay_s = d / kSpeedOfLight;
  double amp = ofdm.wavelength() / (4.0 * std::numbers::pi * d);
  if (with_pedestrians)
    amp *= blockage_factor(env, {ant.x, ant.y}, {ue.x, ue.y});
  p.amplitude = {amp, 0.0};
  return p;
}

inline ResolvedPath resolve_scattered(const ArrayGeometry& array, const OfdmConfig& ofdm,
                                      const Environment& env, const Scatterer& sc,
                                      const Vec3& ue, int m, bool with_pedestrians) {
  const Vec3 ant = array.element_position(m);
  const double d1 = distance(ant, sc.position);
  const double d2 = distance(sc.position, ue);
  const double leg_amp = ofdm.wavelength() / (4.0 * std::numbers::pi);
  ResolvedPath p;
  p.delay_s = (d1 + d2) / kSpeedOfLight;
  std::complex<double> amp = sc.reflection_gain * (leg_amp / d1) * (leg_amp / d2);
  if (with_pedestrians) {
    const Vec2 a{ant.x, ant.y}, s{sc.position.x, sc.position.y}, u{ue.x, ue.y};
    amp *= blockage_factor(env, a, s) * blockage_factor(env, s, u);
  }
  p.amplitude = amp;
  return p;
}

/// Accumulates amplitude * exp(-j*2*pi*f_k*tau) for all k into row [m].
/// Phase advances by complex recurrence, re-anchored with an exact polar
/// every 128 subcarriers to bound rounding drift.
inline void accumulate_path(ChannelSnapshot& snap, int m, const OfdmConfig& ofdm,
                            const ResolvedPath& path) {
  const double two_pi = 2.0 * std::numbers::pi;
  const std::complex<double> step =
      std::polar(1.0, -two_pi * ofdm.delta_f() * path.delay_s);
  std::complex<double> phasor{0.0, 0.0};
  for (int k = 0; k < ofdm.n_subcarriers; ++k) {
    if (k % 128 == 0) {
      // -2*pi*f_k*tau can reach ~1e11 rad for indoor delays; reduce in
      // double before std::polar to keep the anchor accurate.
      const double cycles = ofdm.subcarrier_freq(k) * path.delay_s;
      const double frac = cycles - std::floor(cycles);
      phasor = std::polar(1.0, -two_pi * frac);
    } else {
      phasor *= step;
    }
    snap.at(m, k) += path.amplitude * phasor;
  }
}

inline ChannelSnapshot synth(const Environment& env, const ArrayGeometry& array,
                             const OfdmConfig& ofdm, const Vec3& ue_pos,
                             bool with_pedestrians) {
  array.validate();
  ofdm.validate();
  env.validate();
  require(env.area_bounds.contains(ue_pos.x, ue_pos.y),
          "UE position outside the environment area bounds");
  require(env.path_count() > 0, "degenerate environment: no propagation paths");

  ChannelSnapshot snap(array.n_antennas(), ofdm.n_subcarriers);
  for (int m = 0; m < array.n_antennas(); ++m) {
    if (env.los_enabled)
      accumulate_path(snap, m, ofdm, resolve_los(array, ofdm, env, ue_pos, m, with_pedestrians));
    for (const auto& sc : env.scatterers)
      accumulate_path(snap, m, ofdm,
                      resolve_scattered(array, ofdm, env, sc, ue_pos, m, with_pedestrians));
  }
  return snap;
}

}  // namespace detail

/// Clean CSI snapshot for a UE position. Deterministic; the seed is accepted
/// for interface stability but the geometric model itself is noise-free.
inline ChannelSnapshot synth_csi(const Environment& env, const ArrayGeometry& array,
                                 const OfdmConfig& ofdm, const Vec3& ue_pos,
                                 [[maybe_unused]] uint64_t seed = 0) {
  return detail::synth(env, array, ofdm, ue_pos, /*with_pedestrians=*/false);
}

/// Snapshot with pedestrian blockage applied per path leg before summation.
/// With an empty pedestrian list this equals synth_csi exactly.
inline ChannelSnapshot apply_disturbance(const Environment& env, const ArrayGeometry& array,
                                         const OfdmConfig& ofdm, const Vec3& ue_pos) {
  ChannelSnapshot snap = detail::synth(env, array, ofdm, ue_pos, /*with_pedestrians=*/true);
  snap.disturbed = !env.pedestrians.empty();
  return snap;
}

}  // namespace csiloc::sim
