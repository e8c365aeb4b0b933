#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/structure_constants.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(CHEVALLEY_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::vector<std::string>> load_csv(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

// A labeled integer matrix fixture: first row column labels, first cell of
// each following row the row label; empty cells stay empty.
struct MatrixFixture {
    std::vector<int> row_labels, col_labels;
    std::vector<std::vector<std::string>> cells;

    const std::string& at(int row_label, int col_label) const {
        for (size_t i = 0; i < row_labels.size(); ++i)
            if (row_labels[i] == row_label)
                for (size_t j = 0; j < col_labels.size(); ++j)
                    if (col_labels[j] == col_label) return cells[i][j];
        throw std::out_of_range("matrix fixture: no such cell");
    }
};

inline MatrixFixture load_matrix(const std::string& name) {
    auto rows = load_csv(name);
    MatrixFixture m;
    for (size_t j = 1; j < rows[0].size(); ++j) m.col_labels.push_back(std::stoi(rows[0][j]));
    for (size_t i = 1; i < rows.size(); ++i) {
        m.row_labels.push_back(std::stoi(rows[i][0]));
        std::vector<std::string> line(rows[i].begin() + 1, rows[i].end());
        line.resize(m.col_labels.size());
        m.cells.push_back(line);
    }
    return m;
}

// All structure-constant state, built once across the test binary.
struct Engine {
    chevalley::RootSystem rs = chevalley::RootSystem::build_f4();
    chevalley::ExtraspecialChoice choice = chevalley::find_extraspecial(rs);
    chevalley::ConstantTable table = chevalley::solve_constants(rs, choice);
};

inline const Engine& engine() {
    static Engine e;
    return e;
}

inline chevalley::SignAssignment random_assignment(std::mt19937_64& rng) {
    chevalley::SignAssignment a;
    for (int id = 0; id < chevalley::SignSymbol::count; ++id)
        a.set(chevalley::SignSymbol::from_id(id), (rng() & 1) ? 1 : -1);
    return a;
}

}  // namespace testutil
