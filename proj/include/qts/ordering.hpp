#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qts {

enum class Rel { less, equivalent, greater };

/// A total ordering of X_n, listed from least to greatest element.
class TotalOrdering {
public:
    explicit TotalOrdering(std::vector<int> order) : order_(std::move(order)) {
        const int n = static_cast<int>(order_.size());
        if (n < 1) throw std::invalid_argument("TotalOrdering: n must be >= 1");
        rank_.assign(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            const int x = order_[static_cast<std::size_t>(i)];
            if (x < 1 || x > n) throw std::invalid_argument("TotalOrdering: element out of range");
            if (rank_[static_cast<std::size_t>(x - 1)] != -1)
                throw std::invalid_argument("TotalOrdering: repeated element");
            rank_[static_cast<std::size_t>(x - 1)] = i;
        }
    }

    /// 1 < 2 < ... < n.
    static TotalOrdering natural(int n) {
        std::vector<int> o(static_cast<std::size_t>(n));
        std::iota(o.begin(), o.end(), 1);
        return TotalOrdering(std::move(o));
    }

    int n() const { return static_cast<int>(order_.size()); }

    /// Element at the given rank, 0-based from the least.
    int at(int rank) const { return order_.at(static_cast<std::size_t>(rank)); }

    int rank_of(int x) const { return rank_.at(static_cast<std::size_t>(x - 1)); }

    bool leq(int x, int y) const { return rank_of(x) <= rank_of(y); }

    Rel compare(int x, int y) const {
        if (x == y) return Rel::equivalent;
        return rank_of(x) < rank_of(y) ? Rel::less : Rel::greater;
    }

    const std::vector<int>& order() const { return order_; }

    bool operator==(const TotalOrdering& o) const { return order_ == o.order_; }
    auto operator<=>(const TotalOrdering& o) const { return order_ <=> o.order_; }

private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

/// A weak ordering of X_n: a totally ordered partition C_1 < ... < C_k.
/// Elements inside one block are equivalent; blocks are listed from the
/// least block to the greatest. Within each block elements are stored in
/// increasing natural order, so equal weak orderings compare equal.
class WeakOrdering {
public:
    WeakOrdering(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        if (n_ < 1) throw std::invalid_argument("WeakOrdering: n must be >= 1");
        if (blocks_.empty()) throw std::invalid_argument("WeakOrdering: needs at least one block");
        block_of_.assign(static_cast<std::size_t>(n_), -1);
        int covered = 0;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& blk = blocks_[b];
            if (blk.empty()) throw std::invalid_argument("WeakOrdering: empty block");
            std::sort(blk.begin(), blk.end());
            for (int x : blk) {
                if (x < 1 || x > n_) throw std::invalid_argument("WeakOrdering: element out of range");
                if (block_of_[static_cast<std::size_t>(x - 1)] != -1)
                    throw std::invalid_argument("WeakOrdering: element in two blocks");
                block_of_[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
                ++covered;
            }
        }
        if (covered != n_) throw std::invalid_argument("WeakOrdering: blocks do not cover X_n");
    }

    static WeakOrdering single_block(int n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return WeakOrdering(n, {std::move(all)});
    }

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

    /// Index of the block containing x, 0-based in ascending block order.
    int block_index(int x) const { return block_of_.at(static_cast<std::size_t>(x - 1)); }

    Rel compare(int x, int y) const {
        const int bx = block_index(x), by = block_index(y);
        if (bx == by) return Rel::equivalent;
        return bx < by ? Rel::less : Rel::greater;
    }

    bool leq(int x, int y) const { return block_index(x) <= block_index(y); }
    bool equivalent(int x, int y) const { return block_index(x) == block_index(y); }
    bool less(int x, int y) const { return block_index(x) < block_index(y); }

    bool operator==(const WeakOrdering& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    auto operator<=>(const WeakOrdering& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return blocks_ <=> o.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// The least total ordering extending W in the lexicographic sense:
/// blocks in ascending order, natural order inside each block.
inline TotalOrdering lexicographic_extension(const WeakOrdering& w) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(w.n()));
    for (const auto& blk : w.blocks())
        for (int x : blk) order.push_back(x);
    return TotalOrdering(std::move(order));
}

}  // namespace qts
