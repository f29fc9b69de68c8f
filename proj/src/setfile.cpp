#include "fuglab/setfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fuglab/transcript.hpp"

namespace fuglab {

namespace {

std::string format_error(const std::string& path, int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << path << ":" << line << ":" << col << ": " << msg;
    return os.str();
}

std::pair<int, int> line_col_of_offset(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

PointSet parse_json_format(const std::string& text, const std::string& path) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SetFileError(path, line, col, "invalid JSON: " + std::string(e.what()));
    }
    try {
        return point_set_from_json(j);
    } catch (const SetFileError&) {
        throw;
    } catch (const std::exception& e) {
        throw SetFileError(path, 1, 1, e.what());
    }
}

PointSet parse_matrix_format(const std::string& text, const std::string& path,
                             const std::optional<std::vector<Coord>>& moduli) {
    if (!moduli)
        throw SetFileError(path, 1, 1,
                           "matrix text format needs moduli (pass --moduli, e.g. \"24,24,24\")");
    std::vector<std::vector<Coord>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line.substr(0, line.find('#'));
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(trimmed);
        std::vector<Coord> row;
        std::string token;
        while (ls >> token) {
            try {
                std::size_t used = 0;
                Coord value = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                row.push_back(value);
            } catch (const std::exception&) {
                auto col = static_cast<int>(trimmed.find(token)) + 1;
                throw SetFileError(path, lineno, col, "not an integer: '" + token + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw SetFileError(path, 1, 1, "no rows in matrix file");
    if (rows.size() != moduli->size())
        throw SetFileError(path, 1, 1,
                           "matrix has " + std::to_string(rows.size()) + " rows but " +
                               std::to_string(moduli->size()) + " moduli were given");
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != rows[0].size())
            throw SetFileError(path, static_cast<int>(r) + 1, 1, "rows have unequal lengths");
    try {
        return PointSet::from_matrix_columns(Group::make(*moduli), rows);
    } catch (const std::exception& e) {
        throw SetFileError(path, 1, 1, e.what());
    }
}

} // namespace

SetFileError::SetFileError(const std::string& path, int line, int col, const std::string& message)
    : std::runtime_error(format_error(path, line, col, message)),
      path_(path),
      line_(line),
      col_(col) {}

PointSet parse_point_set(const std::string& text, const std::string& path_for_errors,
                         const std::optional<std::vector<Coord>>& text_moduli) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw SetFileError(path_for_errors, 1, 1, "empty set file");
    if (text[first] == '{') return parse_json_format(text, path_for_errors);
    return parse_matrix_format(text, path_for_errors, text_moduli);
}

PointSet read_point_set(const std::string& path,
                        const std::optional<std::vector<Coord>>& text_moduli) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SetFileError(path, 0, 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_point_set(os.str(), path, text_moduli);
}

std::string point_set_to_json_text(const PointSet& s) {
    return point_set_to_json(s).dump(2) + "\n";
}

void write_point_set(const std::string& path, const PointSet& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << point_set_to_json_text(s);
}

} // namespace fuglab
