// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rpafit {

/// FNV-1a 64-bit hash of a byte sequence.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x00000100000001b3ULL;
  }
  return h;
}

/// Content hash of a file, rendered as "fnv1a64:<16 hex digits>".
/// Throws FileNotFoundError.
std::string fingerprint_file(const std::string& path);

/// Same rendering for an in-memory buffer.
std::string fingerprint_bytes(std::string_view bytes);

}  // namespace rpafit
