#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qts/op_table.hpp"
#include "qts/ordering.hpp"

namespace qts {

/// Value grid of the table with both axes arranged by the given ordering:
/// columns are first arguments from least to greatest, rows are second
/// arguments from greatest (top) down to least.
inline std::string render_grid(const OpTable& f, const TotalOrdering& axes) {
    if (f.n() != axes.n()) throw std::invalid_argument("render_grid: size mismatch");
    const int n = f.n();
    int width = 1;
    for (int v = n; v >= 10; v /= 10) ++width;
    std::ostringstream out;
    for (int row = n - 1; row >= 0; --row) {
        const int y = axes.at(row);
        for (int col = 0; col < n; ++col) {
            const int x = axes.at(col);
            if (col > 0) out << ' ';
            const std::string s = std::to_string(f(x, y));
            out << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render_grid(const OpTable& f) { return render_grid(f, TotalOrdering::natural(f.n())); }

/// DOT graph of the contour plot: vertices are the cells of the table, and
/// each value class forms one complete component.
inline std::string render_dot(const OpTable& f) {
    const int n = f.n();
    std::ostringstream out;
    out << "graph contour {\n";
    for (int z = 1; z <= n; ++z) {
        std::vector<std::pair<int, int>> cells;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (f(x, y) == z) cells.emplace_back(x, y);
        if (cells.empty()) continue;
        out << "  // value " << z << "\n";
        auto name = [](std::pair<int, int> c) {
            return "\"(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")\"";
        };
        if (cells.size() == 1) {
            out << "  " << name(cells[0]) << ";\n";
            continue;
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j)
                out << "  " << name(cells[i]) << " -- " << name(cells[j]) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace qts
