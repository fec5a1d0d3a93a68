#pragma once

#include <string>
#include <string_view>

#include "logder/arrangement.hpp"

namespace logder {

/// Plain-text arrangement files:
///
///   # comment
///   field Q            (or: field F 7)
///   1 0 2              ax ay multiplicity
///   1/2 -3 1
///
/// Blank lines and '#' comments are ignored. Forms are normalized; two lines
/// naming the same hyperplane are an error. Throws ParseError with the line.
Multiarrangement parse_arrangement(std::string_view text);
Multiarrangement read_arrangement_file(const std::string& path);

/// Inverse of parse_arrangement, one normalized hyperplane per line.
std::string render_arrangement(const Multiarrangement& m);

}  // namespace logder
