#pragma once

#include <cstdio>
#include <string>

namespace hetpref {

// Full-precision decimal rendering (17 significant digits) so regression
// diffs on emitted CSV/JSON are exact.
inline std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hetpref
