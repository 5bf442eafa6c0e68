#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace geomtl {

// FNV-1a, 64-bit.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 14695981039346656037ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Hash of a file's raw bytes; throws IoError when the file cannot be read.
uint64_t fnv1a64_file(const std::string& path);

// Fixed-width lowercase hex, convenient for manifests.
std::string hash_hex(uint64_t h);

}  // namespace geomtl
