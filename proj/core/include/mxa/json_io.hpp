#pragma once
//
// Project-wide JSON formats. Matrices travel as
//   {"rows": n, "cols": m, "entries": [[re, im], ...]}   (row-major)
// and parse/emit round-trips exactly (shortest-round-trip doubles).
//

#include <string>

#include <json.hpp>

#include "mxa/dense.hpp"

namespace mxa {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

std::string matrix_to_string(const Matrix& m);
Matrix matrix_from_string(const std::string& text);

Matrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Matrix& m);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace mxa
