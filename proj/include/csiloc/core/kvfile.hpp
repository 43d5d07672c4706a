#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csiloc/core/errors.hpp"

namespace csiloc {

/// Plain-text `key = value` file with `[section]` headers and `#` comments.
/// Insertion order is preserved so a round-tripped file is stable, which the
/// run directories rely on. Used for experiment configs and environment
/// presets.
class KvFile {
 public:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
  };

  static KvFile parse(const std::string& text, const std::string& origin = "<string>") {
    KvFile kv;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view s = trim(line);
      if (s.empty() || s.front() == '#') continue;
      if (s.front() == '[') {
        if (s.back() != ']')
          throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated section header");
        section = std::string(trim(s.substr(1, s.size() - 2)));
        kv.section_for(section);
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
      std::string key(trim(s.substr(0, eq)));
      std::string value(trim(s.substr(eq + 1)));
      if (key.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
      kv.set(section, key, value);
    }
    return kv;
  }

  static KvFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& sec : sections_) {
      if (!first) out << "\n";
      first = false;
      if (!sec.name.empty()) out << "[" << sec.name << "]\n";
      for (const auto& [k, v] : sec.entries) out << k << " = " << v << "\n";
    }
    return out.str();
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << to_string();
  }

  const std::string* find(const std::string& section, const std::string& key) const {
    for (const auto& sec : sections_) {
      if (sec.name != section) continue;
      for (const auto& [k, v] : sec.entries)
        if (k == key) return &v;
    }
    return nullptr;
  }

  bool has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
  }

  void set(const std::string& section, const std::string& key, const std::string& value) {
    auto& sec = section_for(section);
    for (auto& [k, v] : sec.entries) {
      if (k == key) {
        v = value;
        return;
      }
    }
    sec.entries.emplace_back(key, value);
  }

  /// Applies a `--section.key=value` command-line override.
  void apply_override(const std::string& spec) {
    std::string_view s = spec;
    if (s.rfind("--", 0) == 0) s.remove_prefix(2);
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("override must look like --section.key=value: " + spec);
    std::string_view path = s.substr(0, eq);
    const auto dot = path.find('.');
    if (dot == std::string_view::npos)
      throw ConfigError("override key must be section.key: " + spec);
    set(std::string(path.substr(0, dot)), std::string(path.substr(dot + 1)),
        std::string(trim(s.substr(eq + 1))));
  }

  std::string get_str(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) throw ConfigError("missing config key [" + section + "] " + key);
    return *v;
  }
  std::string get_str(const std::string& section, const std::string& key,
                      const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
  }

  double get_double(const std::string& section, const std::string& key) const {
    return parse_double(get_str(section, key), section, key);
  }
  double get_double(const std::string& section, const std::string& key, double fallback) const {
    const std::string* v = find(section, key);
    return v ? parse_double(*v, section, key) : fallback;
  }

  int64_t get_int(const std::string& section, const std::string& key) const {
    return parse_int(get_str(section, key), section, key);
  }
  int64_t get_int(const std::string& section, const std::string& key, int64_t fallback) const {
    const std::string* v = find(section, key);
    return v ? parse_int(*v, section, key) : fallback;
  }

  uint64_t get_u64(const std::string& section, const std::string& key, uint64_t fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    uint64_t out = 0;
    const auto* b = v->data();
    auto [p, ec] = std::from_chars(b, b + v->size(), out);
    if (ec != std::errc() || p != b + v->size())
      throw ConfigError("bad unsigned value for [" + section + "] " + key + ": " + *v);
    return out;
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ConfigError("bad boolean for [" + section + "] " + key + ": " + *v);
  }

  std::vector<double> get_double_list(const std::string& section, const std::string& key,
                                      std::vector<double> fallback = {}) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    std::vector<double> out;
    for (const auto& item : split_csv(*v)) out.push_back(parse_double(item, section, key));
    return out;
  }

  std::vector<int> get_int_list(const std::string& section, const std::string& key,
                                std::vector<int> fallback = {}) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    std::vector<int> out;
    for (const auto& item : split_csv(*v))
      out.push_back(static_cast<int>(parse_int(item, section, key)));
    return out;
  }

  const std::vector<Section>& sections() const { return sections_; }

  static std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
      size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      std::string item(trim(std::string_view(s).substr(start, end - start)));
      if (!item.empty()) out.push_back(std::move(item));
      start = end + 1;
    }
    return out;
  }

 private:
  Section& section_for(const std::string& name) {
    for (auto& sec : sections_)
      if (sec.name == name) return sec;
    sections_.push_back(Section{name, {}});
    return sections_.back();
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }

  static double parse_double(const std::string& v, const std::string& section,
                             const std::string& key) {
    if (v == "inf" || v == "+inf") return std::numeric_limits<double>::infinity();
    if (v == "-inf") return -std::numeric_limits<double>::infinity();
    try {
      size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw ConfigError("bad number for [" + section + "] " + key + ": " + v);
    }
  }

  static int64_t parse_int(const std::string& v, const std::string& section,
                           const std::string& key) {
    int64_t out = 0;
    const auto* b = v.data();
    auto [p, ec] = std::from_chars(b, b + v.size(), out);
    if (ec != std::errc() || p != b + v.size())
      throw ConfigError("bad integer for [" + section + "] " + key + ": " + v);
    return out;
  }

  std::vector<Section> sections_;
};

}  // namespace csiloc
