#include "mcperm/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace mcperm {

MatrixInput matrix_from_json(const nlohmann::json& j) {
    if (j.contains("heights")) {
        if (!j.contains("rows")) throw std::invalid_argument("matrix json: missing field 'rows'");
        std::vector<int> h = j.at("heights").get<std::vector<int>>();
        return FerrersMatrix(j.at("rows").get<int>(), std::move(h));
    }
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix json: need 'rows', 'cols' and 'entries' (or 'heights')");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    NumericMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("matrix json: row count mismatch in 'entries'");
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix json: column count mismatch in 'entries'");
        for (int j2 = 0; j2 < cols; ++j2) {
            const auto& cell = row.at(static_cast<size_t>(j2));
            if (cell.is_string()) m.at(i, j2) = rational_from_string(cell.get<std::string>());
            else if (cell.is_number_integer()) m.at(i, j2) = Rational(cell.get<long>());
            else throw std::invalid_argument("matrix json: entries must be rational strings or integers");
        }
    }
    return MonotoneColumnMatrix(std::move(m));
}

MatrixInput load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

nlohmann::ordered_json to_json(const MonotoneColumnMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).get_str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

nlohmann::ordered_json to_json(const FerrersMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["heights"] = m.heights();
    return j;
}

NumericMatrix load_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv file: " + path);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            size_t a = cell.find_first_not_of(" \t\r");
            size_t b = cell.find_last_not_of(" \t\r");
            if (a == std::string::npos) throw std::invalid_argument("csv: empty cell");
            row.push_back(rational_from_string(cell.substr(a, b - a + 1)));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("csv: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("csv: no data");
    NumericMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

}  // namespace mcperm
