#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace wsgreedy {

// Comma-separated matrix with an optional single header row (detected by a
// non-numeric first row). Throws ParseError with row/column locations on
// ragged rows, non-numeric cells, or empty input.
Eigen::MatrixXd load_matrix(const std::string& path);
Eigen::MatrixXd parse_matrix(std::istream& in, const std::string& origin = "<stream>");

}  // namespace wsgreedy
