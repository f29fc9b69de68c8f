#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuglab/group.hpp"

namespace fuglab {

/// Parse failure with a position, formatted as "path:line:col: message".
class SetFileError : public std::runtime_error {
public:
    SetFileError(const std::string& path, int line, int col, const std::string& message);
    const std::string& path() const { return path_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string path_;
    int line_;
    int col_;
};

/// Reads a point set from either format: the JSON object
/// {"moduli":[...],"points":[[...],...]} or the matrix text format (d rows of
/// whitespace-separated residues, one column per element), which needs the
/// moduli supplied separately.
PointSet read_point_set(const std::string& path,
                        const std::optional<std::vector<Coord>>& text_moduli = std::nullopt);

PointSet parse_point_set(const std::string& text, const std::string& path_for_errors,
                         const std::optional<std::vector<Coord>>& text_moduli = std::nullopt);

std::string point_set_to_json_text(const PointSet& s);
void write_point_set(const std::string& path, const PointSet& s);

} // namespace fuglab
