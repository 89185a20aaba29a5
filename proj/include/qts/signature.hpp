#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qts/ordering.hpp"

namespace qts {

/// Block sizes (n_1,...,n_k) of a weak ordering, in ascending block order.
class Signature {
public:
    explicit Signature(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Signature: needs at least one part");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Signature: parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }

    /// Sum of the parts (the carrier size).
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool operator==(const Signature&) const = default;
    auto operator<=>(const Signature&) const = default;

private:
    std::vector<int> parts_;
};

inline Signature signature_of(const WeakOrdering& w) {
    std::vector<int> parts;
    parts.reserve(w.blocks().size());
    for (const auto& blk : w.blocks()) parts.push_back(static_cast<int>(blk.size()));
    return Signature(std::move(parts));
}

/// The nondecreasing sequence of preimage sizes |F^-1[z]| of an operation.
/// Only monotonicity and the per-entry bound are structural; sequences that
/// actually arise from an operation additionally sum to n^2.
class PreimageSequence {
public:
    explicit PreimageSequence(std::vector<int> counts) : counts_(std::move(counts)) {
        const int n = static_cast<int>(counts_.size());
        if (n < 1) throw std::invalid_argument("PreimageSequence: needs at least one entry");
        int prev = 0;
        for (int c : counts_) {
            if (c < 0 || c > n * n) throw std::invalid_argument("PreimageSequence: entry out of range");
            if (c < prev) throw std::invalid_argument("PreimageSequence: not nondecreasing");
            prev = c;
        }
    }

    const std::vector<int>& counts() const { return counts_; }
    int n() const { return static_cast<int>(counts_.size()); }

    bool operator==(const PreimageSequence&) const = default;
    auto operator<=>(const PreimageSequence&) const = default;

private:
    std::vector<int> counts_;
};

}  // namespace qts
