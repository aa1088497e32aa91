#pragma once

#include <string>
#include <string_view>

namespace divnet {

// Shortest decimal representation that parses back to exactly the same
// double. Used wherever files must survive a write/parse/write cycle
// byte-for-byte.
std::string format_full(double v);

// Fixed number of significant digits (printf %g semantics).
std::string format_sig(double v, int digits);

// Quote a CSV field only when it contains a delimiter, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace divnet
