#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qrcss/classical.hpp"
#include "qrcss/css.hpp"

namespace qrcss {

/// Parse failure with the 1-based line number of the offending input line.
struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Classical code file: header "n k", then k rows of n characters from {0,1}.
/// '#' starts a comment anywhere on a line.
void write_classical(std::ostream& os, const ClassicalCode& c);
ClassicalCode read_classical(std::istream& is, const std::string& label = "");

ClassicalCode read_classical_file(const std::string& path);
void write_classical_file(const std::string& path, const ClassicalCode& c);

/// CSS code file: sections [SX] [SZ] [LX] [LZ], each followed by 0/1 rows of
/// equal length; k is recomputed from ranks on read, never trusted.
void write_css(std::ostream& os, const CssCode& q);
CssCode read_css(std::istream& is, const std::string& label = "");

CssCode read_css_file(const std::string& path);
void write_css_file(const std::string& path, const CssCode& q);

/// True when the first significant line looks like a classical header
/// ("n k") rather than a CSS section marker.
bool sniff_classical(std::istream& is);

}  // namespace qrcss
