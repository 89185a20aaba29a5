#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qts/op_table.hpp"

namespace qts {

/// Parse failure in a table document, with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

struct Token {
    int value;
    int line;
    int column;
};

/// Integer tokens of a table document; blank lines and '#' comments skipped.
inline std::vector<Token> tokenize_table(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
            const std::string word = line.substr(i, j - i);
            try {
                std::size_t used = 0;
                const int v = std::stoi(word, &used);
                if (used != word.size()) throw std::invalid_argument(word);
                tokens.push_back({v, lineno, static_cast<int>(i) + 1});
            } catch (const std::exception&) {
                throw ParseError("expected an integer, got '" + word + "'", lineno, static_cast<int>(i) + 1);
            }
            i = j;
        }
    }
    return tokens;
}

}  // namespace detail

/// Reads a table document: a header line with n followed by n rows of n
/// integers, row x listing F(x, 1), ..., F(x, n). Blank lines and '#'
/// comments are ignored.
inline OpTable parse_table(std::istream& in) {
    const auto tokens = detail::tokenize_table(in);
    if (tokens.empty()) throw ParseError("empty document, expected a table", 1, 1);
    const int n = tokens[0].value;
    if (n < 1) throw ParseError("carrier size must be >= 1", tokens[0].line, tokens[0].column);
    const std::size_t expected = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (tokens.size() < expected) {
        const auto& last = tokens.back();
        throw ParseError("expected " + std::to_string(n * n) + " cells, got " +
                             std::to_string(tokens.size() - 1),
                         last.line, last.column);
    }
    if (tokens.size() > expected) {
        const auto& extra = tokens[expected];
        throw ParseError("unexpected trailing value", extra.line, extra.column);
    }
    std::vector<int> cells;
    cells.reserve(expected - 1);
    for (std::size_t i = 1; i < expected; ++i) {
        const auto& t = tokens[i];
        if (t.value < 1 || t.value > n)
            throw ParseError("cell value " + std::to_string(t.value) + " outside 1.." + std::to_string(n),
                             t.line, t.column);
        cells.push_back(t.value);
    }
    return OpTable(n, std::move(cells));
}

inline OpTable parse_table(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in);
}

/// Normalized document: header, then rows with single spaces, trailing newline.
inline std::string emit_table(const OpTable& f) {
    std::ostringstream out;
    out << f.n() << '\n';
    for (int x = 1; x <= f.n(); ++x) {
        for (int y = 1; y <= f.n(); ++y) {
            if (y > 1) out << ' ';
            out << f(x, y);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qts
