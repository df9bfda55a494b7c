#pragma once

// Plain-text number formatting shared by the JSON and CSV writers.

#include "polyexp/types.hpp"

#include <string>
#include <string_view>

namespace polyexp {

/// 17 significant digits; non-finite values print as null.
std::string format_double(double v);

/// JSON pair "[re, im]".
std::string format_complex(Complex z);

/// JSON string literal with escapes.
std::string json_quote(std::string_view text);

}  // namespace polyexp
