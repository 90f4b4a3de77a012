#pragma once

#include <string>

namespace exrobin::format {

// Shortest decimal form with `digits` significant digits (printf %g grammar).
// Used for every floating-point field in machine-readable output so that
// repeated runs are byte-identical.
std::string format_double(double v, int digits);

// The double a %.{digits}g round trip would produce: format then parse.
// Numbers destined for JSON are rounded this way before serialization.
double round_sig(double v, int digits);

}  // namespace exrobin::format
