#pragma once

#include <span>
#include <vector>

#include "twcst/types.hpp"

namespace twcst {

/// Ordered keys 1..n with non-negative integer weights.
class Instance {
public:
    explicit Instance(std::vector<Weight> weights);

    int size() const noexcept { return static_cast<int>(weights_.size()); }
    Weight weight(Key k) const { return weights_.at(static_cast<std::size_t>(k - 1)); }
    Weight total() const noexcept { return total_; }
    std::span<const Weight> weights() const noexcept { return weights_; }

    /// Heaviest key; ties go to the smallest index.
    Key max_weight_key() const noexcept { return max_key_; }
    Weight max_weight() const noexcept { return weight(max_key_); }

    Weight weight_of(std::span<const Key> keys) const;

    /// Keys 1..count with the same weights.
    Instance prefix(int count) const;
    /// Key k becomes n + 1 - k.
    Instance mirrored() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Weight> weights_;
    Weight total_ = 0;
    Key max_key_ = 1;
};

/// Strict weak order "heavier first, then smaller index".
inline bool heavier_first(const Instance& inst, Key a, Key b) {
    const Weight wa = inst.weight(a);
    const Weight wb = inst.weight(b);
    return wa != wb ? wa > wb : a < b;
}

std::vector<Key> all_keys(const Instance& inst);

}  // namespace twcst
