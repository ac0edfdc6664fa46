#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "facemagic/labeling.hpp"

namespace facemagic {

/// Which grid row comes first in a file or rendering. Up = j=1 first
/// (the default file order); Down = j=n first (the order the checkerboard
/// tables print in).
enum class RowOrder { Up, Down };

/// The self-describing interchange document: key=value header lines
/// (m, n, surface, optional S, optional generator), a blank line, then
/// n rows of m space-separated labels.
struct LabelingDocument {
    Labeling labeling;
    std::optional<int> S;
    std::optional<std::string> generator;
};

/// Serializes bit-exactly: fixed header order, rows in `order`.
std::string write_document(const LabelingDocument& doc, RowOrder order = RowOrder::Up);

/// Parses the document format. Labels are validated on load. Throws
/// ParseError with line context, or ValidationError for bad label arrays.
LabelingDocument parse_document(const std::string& text, RowOrder order = RowOrder::Up);

/// CSV export: n lines of m comma-separated labels, no header.
std::string write_csv(const Labeling& L, RowOrder order = RowOrder::Up);

/// Parses a CSV grid; m and n are taken from the grid shape.
Labeling parse_csv(const std::string& text, RowOrder order = RowOrder::Up);

/// ASCII checkerboard with aligned columns, rows printed j = n down to 1
/// so the output matches the figures.
std::string render_ascii(const Labeling& L);

std::string read_file(const std::string& path);           // throws ParseError
void write_file(const std::string& path, const std::string& text);

} // namespace facemagic
