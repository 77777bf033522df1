#pragma once

// Deterministic CSV emission and parsing. Numbers are printed with 17
// significant digits so binary doubles survive a parse/emit round trip
// bit-exactly. Comment lines start with '#'.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace quenchlab::csv {

/// Shortest-width 17-significant-digit decimal form of a double ("%.17g").
std::string format_double(double value);

/// A cell is either a number (re-emitted via format_double) or verbatim text.
using Cell = std::variant<double, std::string>;

struct Row {
    std::vector<Cell> cells;
};

/// One CSV file: leading/trailing comment lines are kept verbatim in order,
/// interleaved with the header line and data rows.
struct Document {
    struct Line {
        enum class Kind { comment, header, data } kind;
        std::string comment;  // verbatim, including '#'
        Row row;              // for header/data lines
    };
    std::vector<Line> lines;
};

std::string emit(const Document& doc);
Document parse(std::istream& in);
Document parse_string(const std::string& text);

}  // namespace quenchlab::csv
