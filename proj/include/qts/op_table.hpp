#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qts/ordering.hpp"
#include "qts/signature.hpp"

namespace qts {

/// A binary operation F : X_n^2 -> X_n as an n x n Cayley table.
/// Cell (x, y) holds F(x, y); all arguments and values are 1-based.
class OpTable {
public:
    OpTable(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
        if (n_ < 1) throw std::invalid_argument("OpTable: n must be >= 1");
        if (cells_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw std::invalid_argument("OpTable: expected n*n cells");
        for (int v : cells_)
            if (v < 1 || v > n_) throw std::invalid_argument("OpTable: cell value out of range");
    }

    template <typename Fn>
    static OpTable from_function(int n, Fn&& f) {
        std::vector<int> cells;
        cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) cells.push_back(f(x, y));
        return OpTable(n, std::move(cells));
    }

    int n() const { return n_; }

    int operator()(int x, int y) const {
        return cells_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(y - 1)];
    }

    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const OpTable&) const = default;
    auto operator<=>(const OpTable&) const = default;

private:
    int n_;
    std::vector<int> cells_;
};

inline OpTable projection_first(int n) {
    return OpTable::from_function(n, [](int x, int) { return x; });
}

inline OpTable projection_second(int n) {
    return OpTable::from_function(n, [](int, int y) { return y; });
}

/// max with respect to the given total ordering.
inline OpTable max_table(const TotalOrdering& order) {
    return OpTable::from_function(order.n(),
                                  [&](int x, int y) { return order.leq(x, y) ? y : x; });
}

/// |F^-1[z]| for each z; entry z-1 of the result. The values sum to n^2.
inline std::vector<int> preimage_counts(const OpTable& f) {
    std::vector<int> counts(static_cast<std::size_t>(f.n()), 0);
    for (int v : f.cells()) ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
}

/// The sorted multiset of preimage counts.
inline PreimageSequence preimage_sequence(const OpTable& f) {
    auto counts = preimage_counts(f);
    std::sort(counts.begin(), counts.end());
    return PreimageSequence(std::move(counts));
}

}  // namespace qts
