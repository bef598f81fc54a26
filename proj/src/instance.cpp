#include "twcst/instance.hpp"

#include <algorithm>
#include <numeric>

namespace twcst {

Instance::Instance(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidInstance("instance needs at least one key");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 0) {
            throw InvalidInstance("weight of key " + std::to_string(i + 1) + " is negative");
        }
        total_ += weights_[i];
        if (weights_[i] > weights_[static_cast<std::size_t>(max_key_ - 1)]) {
            max_key_ = static_cast<Key>(i + 1);
        }
    }
}

Weight Instance::weight_of(std::span<const Key> keys) const {
    Weight sum = 0;
    for (Key k : keys) sum += weight(k);
    return sum;
}

Instance Instance::prefix(int count) const {
    if (count < 1 || count > size()) throw InvalidInstance("prefix length out of range");
    return Instance(std::vector<Weight>(weights_.begin(), weights_.begin() + count));
}

Instance Instance::mirrored() const {
    return Instance(std::vector<Weight>(weights_.rbegin(), weights_.rend()));
}

std::vector<Key> all_keys(const Instance& inst) {
    std::vector<Key> keys(static_cast<std::size_t>(inst.size()));
    std::iota(keys.begin(), keys.end(), 1);
    return keys;
}

}  // namespace twcst
