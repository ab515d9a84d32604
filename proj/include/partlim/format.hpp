#pragma once

#include <cstdio>
#include <string>

namespace partlim {

// Deterministic shortest-round-trip-safe formatting for CSV/JSON export.
// %.17g is byte-stable for a given libc and round-trips every double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace partlim
