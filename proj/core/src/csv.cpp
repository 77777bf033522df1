#include "quenchlab/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace quenchlab::csv {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

Cell parse_cell(const std::string& text) {
    if (!text.empty()) {
        const char* begin = text.c_str();
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin + text.size()) return v;
    }
    return text;
}

void append_cell(std::string& out, const Cell& cell) {
    if (std::holds_alternative<double>(cell)) {
        out += format_double(std::get<double>(cell));
    } else {
        out += std::get<std::string>(cell);
    }
}

Row split_row(const std::string& line, bool numeric) {
    Row row;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
        row.cells.push_back(numeric ? parse_cell(field) : Cell{field});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return row;
}

}  // namespace

std::string emit(const Document& doc) {
    std::string out;
    for (const Document::Line& line : doc.lines) {
        if (line.kind == Document::Line::Kind::comment) {
            out += line.comment;
        } else {
            bool first = true;
            for (const Cell& cell : line.row.cells) {
                if (!first) out += ',';
                first = false;
                append_cell(out, cell);
            }
        }
        out += '\n';
    }
    return out;
}

Document parse(std::istream& in) {
    Document doc;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Document::Line entry;
        if (!line.empty() && line[0] == '#') {
            entry.kind = Document::Line::Kind::comment;
            entry.comment = line;
        } else if (!header_seen) {
            entry.kind = Document::Line::Kind::header;
            entry.row = split_row(line, /*numeric=*/false);
            header_seen = true;
        } else {
            entry.kind = Document::Line::Kind::data;
            entry.row = split_row(line, /*numeric=*/true);
        }
        doc.lines.push_back(std::move(entry));
    }
    return doc;
}

Document parse_string(const std::string& text) {
    std::istringstream stream(text);
    return parse(stream);
}

}  // namespace quenchlab::csv
