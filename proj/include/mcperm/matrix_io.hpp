#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "mcperm/matrices.hpp"

namespace mcperm {

using MatrixInput = std::variant<MonotoneColumnMatrix, FerrersMatrix>;

// {"rows": m, "cols": n, "entries": [["1","2/3",...], ...]} for rational
// matrices, {"rows": m, "heights": [..]} for Ferrers shapes.
MatrixInput matrix_from_json(const nlohmann::json& j);
MatrixInput load_matrix(const std::string& path);

nlohmann::ordered_json to_json(const MonotoneColumnMatrix& m);
nlohmann::ordered_json to_json(const FerrersMatrix& m);

// Comma-separated rational grid, one row per line.
NumericMatrix load_numeric_csv(const std::string& path);

}  // namespace mcperm
