#pragma once

#include <cstddef>
#include <cstdint>

namespace csiloc {

/// FNV-1a 64-bit, used for checkpoint integrity and run-directory content
/// hashes.
class Fnv64 {
 public:
  void update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  uint64_t digest() const { return h_; }

 private:
  uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline uint64_t fnv64(const void* data, size_t n) {
  Fnv64 h;
  h.update(data, n);
  return h.digest();
}

}  // namespace csiloc
