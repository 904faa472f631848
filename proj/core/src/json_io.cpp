#include "mxa/json_io.hpp"

#include <fstream>

namespace mxa {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw Error(Errc::IoError, "matrix JSON needs rows/cols/entries");
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw Error(Errc::IoError, "matrix JSON entry count mismatch");
  Matrix m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j2 = 0; j2 < cols; ++j2) {
      const auto& e = entries[idx++];
      if (!e.is_array() || e.size() != 2) throw Error(Errc::IoError, "entry must be [re, im]");
      m(i, j2) = cpx(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

std::string matrix_to_string(const Matrix& m) { return matrix_to_json(m).dump(); }

Matrix matrix_from_string(const std::string& text) {
  return matrix_from_json(nlohmann::json::parse(text));
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void save_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

Matrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

void save_matrix(const std::string& path, const Matrix& m) {
  save_json(path, matrix_to_json(m));
}

}  // namespace mxa
