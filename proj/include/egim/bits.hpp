#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "egim/rng.hpp"

namespace egim {

using BitVec = std::vector<uint8_t>;

/// Front-consumable queue of bits. Single consumer; popping past the end
/// yields zero pad bits and counts them.
class BitQueue {
public:
    BitQueue() = default;
    explicit BitQueue(BitVec bits) : bits_(std::move(bits)) {}

    void push(uint8_t b) { bits_.push_back(b & 1u); }
    void append(const BitVec& v) { bits_.insert(bits_.end(), v.begin(), v.end()); }

    size_t remaining() const { return bits_.size() - head_; }
    bool empty() const { return head_ >= bits_.size(); }

    /// Pop one bit; returns 0 and bumps the pad counter when exhausted.
    uint8_t pop_or_pad() {
        if (head_ < bits_.size()) return bits_[head_++];
        ++pads_;
        return 0;
    }

    size_t pad_count() const { return pads_; }
    void reset_pad_count() { pads_ = 0; }

private:
    BitVec bits_;
    size_t head_ = 0;
    size_t pads_ = 0;
};

inline BitVec random_bits(Rng& rng, size_t n) {
    BitVec v(n);
    for (auto& b : v) b = static_cast<uint8_t>(rng.bit());
    return v;
}

inline BitVec bits_from_string(const std::string& s) {
    BitVec v;
    v.reserve(s.size());
    for (char c : s) v.push_back(c == '1' ? 1 : 0);
    return v;
}

inline std::string bits_to_string(const BitVec& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace egim
