#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace picard::hashing {

/// Incremental SHA-256, hex-encoded on finalization.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, std::size_t len);
  /// Finalizes and returns the lowercase hex digest; the object must not be
  /// updated afterwards.
  std::string hex_digest();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(const std::string& data);

}  // namespace picard::hashing
