#include "wsgreedy/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wsgreedy/errors.hpp"

namespace wsgreedy {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_cell(const std::string& raw, double& out) {
    const std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return false;
    const std::size_t end = raw.find_last_not_of(" \t\r") + 1;
    const char* first = raw.data() + begin;
    const char* last = raw.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

Eigen::MatrixXd parse_matrix(std::istream& in, const std::string& origin) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_row = true;
    std::size_t cols = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_row(line);

        std::vector<double> row(cells.size());
        bool numeric = true;
        std::size_t bad_col = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_cell(cells[c], row[c])) {
                numeric = false;
                bad_col = c;
                break;
            }
        }
        if (!numeric) {
            if (first_data_row) continue;  // header row
            throw ParseError(origin + ": non-numeric cell at row " + std::to_string(line_no) +
                             ", column " + std::to_string(bad_col + 1));
        }
        if (first_data_row) {
            cols = row.size();
            first_data_row = false;
        } else if (row.size() != cols) {
            throw ParseError(origin + ": ragged row " + std::to_string(line_no) + " has " +
                             std::to_string(row.size()) + " cells, expected " +
                             std::to_string(cols));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(origin + ": no data rows");

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return m;
}

Eigen::MatrixXd load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_matrix(in, path);
}

}  // namespace wsgreedy
