#pragma once

#include <string>
#include <string_view>

#include "torusgreen/defs.hpp"

namespace torusgreen {

// Parses "a+bi" / "a-bi" / "a" / "bi" / "i" (scientific notation allowed in
// either part). Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

// Formats so that parse_complex(format_complex(z)) == z exactly.
std::string format_complex(Complex z);

}  // namespace torusgreen
