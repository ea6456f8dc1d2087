// SPDX-License-Identifier: Apache-2.0
#include "rpafit/fingerprint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rpafit/errors.hpp"

namespace rpafit {

std::string fingerprint_bytes(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string fingerprint_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return fingerprint_bytes(buffer.str());
}

}  // namespace rpafit
