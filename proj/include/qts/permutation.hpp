#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qts {

/// A permutation of X_n = {1,...,n}, stored in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : images_) {
            if (v < 1 || v > n) throw std::invalid_argument("Permutation: image out of range");
            if (seen[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("Permutation: not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    int n() const { return static_cast<int>(images_.size()); }

    /// sigma(x), 1-based.
    int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }

    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int x = 1; x <= n(); ++x) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x - 1)] - 1)] = x;
        return Permutation(std::move(inv));
    }

    /// this o other: x -> this(other(x)).
    Permutation compose(const Permutation& other) const {
        if (n() != other.n()) throw std::invalid_argument("Permutation::compose: size mismatch");
        std::vector<int> im(images_.size());
        for (int x = 1; x <= n(); ++x) im[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
        return Permutation(std::move(im));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Visits all n! permutations of X_n in lexicographic one-line order.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        visit(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

}  // namespace qts
