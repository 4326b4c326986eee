#pragma once

#include <string>

namespace pof {

// Shortest decimal string with 12 significant digits (printf %.12g).
std::string format_sig12(double value);

// Nearest double to the 12-significant-digit decimal rendering of value.
// Applied before JSON serialization so emitted numbers round-trip exactly.
double round_sig12(double value);

}  // namespace pof
