#include "exrobin/format.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace exrobin::format {

std::string format_double(double v, int digits) {
  digits = std::clamp(digits, 1, 17);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

double round_sig(double v, int digits) {
  return std::strtod(format_double(v, digits).c_str(), nullptr);
}

}  // namespace exrobin::format
