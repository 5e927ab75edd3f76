#pragma once

#include <complex>
#include <string>

namespace mcz {

/// Parses "a", "bi", or "a+bi"/"a-bi" with decimal literals; throws
/// std::invalid_argument carrying the offending position on malformed input.
std::complex<double> parse_complex(const std::string& text);

}  // namespace mcz
