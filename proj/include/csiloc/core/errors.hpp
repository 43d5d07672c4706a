#pragma once

#include <stdexcept>
#include <string>

namespace csiloc {

/// Precondition or argument violation (position out of bounds, shape
/// mismatch, stride without grid metadata, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Unrecognized magic bytes or unsupported version in a binary file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated payload or integrity-hash mismatch.
class CorruptionError : public std::runtime_error {
 public:
  explicit CorruptionError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid experiment/net/schedule configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Training aborted on a non-finite loss. Carries the epoch at which the
/// divergence was detected so the caller can report it.
class TrainDivergedError : public std::runtime_error {
 public:
  TrainDivergedError(const std::string& what, int epoch)
      : std::runtime_error(what), epoch_(epoch) {}
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace csiloc
