#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace pairshaper::cli {

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

/// Dense matrix with the column axis as the first row and the row axis as the
/// first column. `corner` labels the top-left cell.
void write_matrix_csv(const std::filesystem::path& path, const std::string& corner, const Eigen::VectorXd& row_axis,
                      const Eigen::VectorXd& col_axis, const Eigen::MatrixXd& values);

/// Column table with a header line. All columns must have the same length.
void write_columns_csv(const std::filesystem::path& path, const std::vector<std::string>& headers,
                       const std::vector<Eigen::VectorXd>& columns);

/// 16-bit binary PGM (P5, big-endian), row-major. Unsigned data maps [0, max]
/// onto [0, 65535]; signed data maps [-m, m] with m = max |value|.
void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& values, bool is_signed = false);

/// Two-space indented JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& value);

}  // namespace pairshaper::cli
