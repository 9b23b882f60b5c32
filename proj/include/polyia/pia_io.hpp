#pragma once

#include <string>
#include <string_view>

#include "polyia/animal.hpp"

namespace polyia {

// PIA v1 text format: first line is the decimal cell count n, then n lines
// "x y" (single space), cells in lex order in the canonical translate, LF
// line endings, no trailing blank line.

std::string to_pia(const Polyiamond& p);

// Strict parse: rejects malformed counts, stray whitespace, wrong ordering,
// non-canonical translates, and trailing content. Throws ParseError (or
// DisconnectedError for a well-formed but disconnected cell list).
Polyiamond parse_pia(std::string_view text);

Polyiamond read_pia_file(const std::string& path);
void write_pia_file(const std::string& path, const Polyiamond& p);

}  // namespace polyia
