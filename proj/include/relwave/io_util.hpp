#pragma once

#include <string>

namespace relwave::io {

/// Shortest text for a double carrying 17 significant digits (round-trip
/// exact). Infinities and NaN render as "inf"/"-inf"/"nan".
std::string format_double(double v);

/// RFC-4180 field quoting: wraps in quotes when the text contains a comma,
/// quote or newline, doubling embedded quotes.
std::string csv_escape(const std::string& field);

}  // namespace relwave::io
