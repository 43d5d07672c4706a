#pragma once

#include <complex>
#include <string>
#include <vector>

#include "csiloc/core/errors.hpp"
#include "csiloc/core/kvfile.hpp"
#include "csiloc/sim/geometry.hpp"
#include "csiloc/sim/ofdm.hpp"

namespace csiloc::sim {

/// Margin around the coverage area inside which scatterers may live.
inline constexpr double kScattererMargin = 4.0;  // meters

struct Scatterer {
  Vec3 position;
  std::complex<double> reflection_gain{0.5, 0.0};  // |gain| <= 1
  int id = 0;                                      // stable across seeded rebuilds
};

/// Static 2D blocker; any propagation leg crossing the segment is attenuated.
struct Pedestrian {
  Vec2 a;
  Vec2 b;
  double attenuation_db = 15.0;
};

struct Environment {
  bool los_enabled = true;
  std::vector<Scatterer> scatterers;
  Rect area_bounds;
  std::vector<Pedestrian> pedestrians;

  void validate() const {
    const Rect box = area_bounds.expanded(kScattererMargin);
    for (const auto& s : scatterers) {
      require(box.contains(s.position.x, s.position.y),
              "scatterer outside the expanded area bounding box");
      require(std::abs(s.reflection_gain) <= 1.0 + 1e-12,
              "scatterer reflection gain magnitude must be <= 1");
    }
    for (const auto& p : pedestrians)
      require(p.attenuation_db >= 0.0, "pedestrian attenuation must be >= 0 dB");
  }

  int path_count() const {
    return static_cast<int>(scatterers.size()) + (los_enabled ? 1 : 0);
  }
};

/// A full simulation scene: geometry + numerology + propagation environment,
/// persisted as a plain-text key=value preset file.
struct Scene {
  ArrayGeometry array;
  OfdmConfig ofdm;
  Environment env;
  double ue_height = 1.5;
  uint64_t seed = 1;

  void validate() const {
    array.validate();
    ofdm.validate();
    env.validate();
  }
};

namespace detail {
inline std::string fmt_num(double v) {
  char tmp[40];
  std::snprintf(tmp, sizeof(tmp), "%.17g", v);
  return tmp;
}
inline std::vector<double> need_list(const KvFile& kv, const std::string& sec,
                                     const std::string& key, size_t n) {
  auto v = kv.get_double_list(sec, key);
  if (v.size() != n)
    throw ConfigError("[" + sec + "] " + key + " must have " + std::to_string(n) + " values");
  return v;
}
}  // namespace detail

inline KvFile scene_to_kv(const Scene& s) {
  using detail::fmt_num;
  KvFile kv;
  kv.set("array", "rows", std::to_string(s.array.rows));
  kv.set("array", "cols", std::to_string(s.array.cols));
  kv.set("array", "spacing", fmt_num(s.array.element_spacing));
  kv.set("array", "origin",
         fmt_num(s.array.origin.x) + ", " + fmt_num(s.array.origin.y) + ", " +
             fmt_num(s.array.origin.z));
  kv.set("ofdm", "subcarriers", std::to_string(s.ofdm.n_subcarriers));
  kv.set("ofdm", "bandwidth_hz", fmt_num(s.ofdm.bandwidth_hz));
  kv.set("ofdm", "carrier_hz", fmt_num(s.ofdm.carrier_hz));
  kv.set("ofdm", "guard_fraction", fmt_num(s.ofdm.guard_fraction));
  kv.set("ofdm", "cp_fraction", fmt_num(s.ofdm.cp_fraction));
  kv.set("environment", "los", s.env.los_enabled ? "true" : "false");
  kv.set("environment", "area",
         fmt_num(s.env.area_bounds.x0) + ", " + fmt_num(s.env.area_bounds.y0) + ", " +
             fmt_num(s.env.area_bounds.x1) + ", " + fmt_num(s.env.area_bounds.y1));
  kv.set("environment", "ue_height", fmt_num(s.ue_height));
  kv.set("environment", "seed", std::to_string(s.seed));
  for (size_t i = 0; i < s.env.scatterers.size(); ++i) {
    const auto& sc = s.env.scatterers[i];
    const std::string sec = "scatterer." + std::to_string(i);
    kv.set(sec, "position",
           fmt_num(sc.position.x) + ", " + fmt_num(sc.position.y) + ", " + fmt_num(sc.position.z));
    kv.set(sec, "gain", fmt_num(sc.reflection_gain.real()) + ", " + fmt_num(sc.reflection_gain.imag()));
    kv.set(sec, "id", std::to_string(sc.id));
  }
  for (size_t i = 0; i < s.env.pedestrians.size(); ++i) {
    const auto& p = s.env.pedestrians[i];
    const std::string sec = "pedestrian." + std::to_string(i);
    kv.set(sec, "segment",
           fmt_num(p.a.x) + ", " + fmt_num(p.a.y) + ", " + fmt_num(p.b.x) + ", " + fmt_num(p.b.y));
    kv.set(sec, "attenuation_db", fmt_num(p.attenuation_db));
  }
  return kv;
}

inline Scene scene_from_kv(const KvFile& kv) {
  Scene s;
  s.array.rows = static_cast<int>(kv.get_int("array", "rows", 8));
  s.array.cols = static_cast<int>(kv.get_int("array", "cols", 8));
  s.array.element_spacing = kv.get_double("array", "spacing", 0.0);
  if (kv.has("array", "origin")) {
    auto o = detail::need_list(kv, "array", "origin", 3);
    s.array.origin = {o[0], o[1], o[2]};
  }
  s.ofdm.n_subcarriers = static_cast<int>(kv.get_int("ofdm", "subcarriers", 1024));
  s.ofdm.bandwidth_hz = kv.get_double("ofdm", "bandwidth_hz", 20e6);
  s.ofdm.carrier_hz = kv.get_double("ofdm", "carrier_hz", 1.25e9);
  s.ofdm.guard_fraction = kv.get_double("ofdm", "guard_fraction", 0.10);
  s.ofdm.cp_fraction = kv.get_double("ofdm", "cp_fraction", 0.125);
  if (s.array.element_spacing <= 0.0) s.array.element_spacing = 0.5 * s.ofdm.wavelength();
  s.env.los_enabled = kv.get_bool("environment", "los", true);
  auto a = detail::need_list(kv, "environment", "area", 4);
  s.env.area_bounds = {a[0], a[1], a[2], a[3]};
  s.ue_height = kv.get_double("environment", "ue_height", 1.5);
  s.seed = kv.get_u64("environment", "seed", 1);
  for (int i = 0;; ++i) {
    const std::string sec = "scatterer." + std::to_string(i);
    if (!kv.has(sec, "position")) break;
    Scatterer sc;
    auto p = detail::need_list(kv, sec, "position", 3);
    sc.position = {p[0], p[1], p[2]};
    auto g = detail::need_list(kv, sec, "gain", 2);
    sc.reflection_gain = {g[0], g[1]};
    sc.id = static_cast<int>(kv.get_int(sec, "id", i));
    s.env.scatterers.push_back(sc);
  }
  for (int i = 0;; ++i) {
    const std::string sec = "pedestrian." + std::to_string(i);
    if (!kv.has(sec, "segment")) break;
    Pedestrian p;
    auto seg = detail::need_list(kv, sec, "segment", 4);
    p.a = {seg[0], seg[1]};
    p.b = {seg[2], seg[3]};
    p.attenuation_db = kv.get_double(sec, "attenuation_db", 15.0);
    s.env.pedestrians.push_back(p);
  }
  s.validate();
  return s;
}

inline void save_scene(const Scene& s, const std::string& path) { scene_to_kv(s).save(path); }
inline Scene load_scene(const std::string& path) { return scene_from_kv(KvFile::load(path)); }

}  // namespace csiloc::sim
