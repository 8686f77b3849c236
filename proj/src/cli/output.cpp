#include "pairshaper/cli/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace pairshaper::cli {
namespace {

std::ofstream open_output(const std::filesystem::path& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer.data(), ptr);
}

void write_matrix_csv(const std::filesystem::path& path, const std::string& corner, const Eigen::VectorXd& row_axis,
                      const Eigen::VectorXd& col_axis, const Eigen::MatrixXd& values) {
  if (values.rows() != row_axis.size() || values.cols() != col_axis.size()) {
    throw std::invalid_argument("write_matrix_csv: axis lengths do not match the matrix");
  }
  auto out = open_output(path);
  std::string line = corner;
  for (Eigen::Index j = 0; j < col_axis.size(); ++j) line += "," + format_double(col_axis(j));
  out << line << '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    line = format_double(row_axis(i));
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      line += ',';
      line += format_double(values(i, j));
    }
    out << line << '\n';
  }
}

void write_columns_csv(const std::filesystem::path& path, const std::vector<std::string>& headers,
                       const std::vector<Eigen::VectorXd>& columns) {
  if (headers.size() != columns.size()) throw std::invalid_argument("write_columns_csv: header count mismatch");
  const Eigen::Index rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw std::invalid_argument("write_columns_csv: ragged columns");
  }
  auto out = open_output(path);
  for (std::size_t k = 0; k < headers.size(); ++k) out << (k ? "," : "") << headers[k];
  out << '\n';
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << format_double(columns[k](i));
    out << '\n';
  }
}

void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& values, bool is_signed) {
  const double scale = is_signed ? values.cwiseAbs().maxCoeff() : values.maxCoeff();
  auto out = open_output(path, true);
  out << "P5\n" << values.cols() << ' ' << values.rows() << "\n65535\n";
  std::vector<char> bytes;
  bytes.reserve(static_cast<std::size_t>(values.size()) * 2);
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      double x = scale > 0.0 ? values(i, j) / scale : 0.0;
      if (is_signed) x = 0.5 * (x + 1.0);
      const auto level = static_cast<std::uint16_t>(std::lround(std::clamp(x, 0.0, 1.0) * 65535.0));
      bytes.push_back(static_cast<char>(level >> 8));
      bytes.push_back(static_cast<char>(level & 0xff));
    }
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& value) {
  auto out = open_output(path);
  out << value.dump(2) << '\n';
}

}  // namespace pairshaper::cli
