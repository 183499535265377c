#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace drcss {

// Nine significant digits; the C library rounds exact ties to even.
inline std::string fmt9(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// The double nearest to fmt9(x); JSON writers then print it in <= 9 digits.
inline double round9(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(fmt9(x).c_str(), nullptr);
}

}  // namespace drcss
