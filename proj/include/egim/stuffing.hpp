#pragma once

#include <vector>

#include "egim/bits.hpp"
#include "egim/constellation.hpp"

namespace egim {

struct StuffResult {
    std::vector<Codeword> codewords;
    size_t bits_consumed = 0;  // bits taken from the queue, pad excluded
    size_t pad_bits = 0;       // zero bits appended when the queue ran dry
};

/// Bit stuffing: input bit 0 emits the off codeword, input bit 1 emits
/// the index bit plus the next log2(M) payload bits. Exactly `count`
/// codewords are produced; the queue is padded with zeros if it runs out
/// mid-frame.
StuffResult stuff(BitQueue& bits, int mod_order, size_t count);

/// Inverse of stuff(). Throws std::invalid_argument on a codeword with
/// index bit 0 and nonzero payload (cannot arise from ML detection).
BitVec destuff(const std::vector<Codeword>& codewords, int mod_order);

/// Table lookup of a codeword sequence.
CVec map_codewords(const std::vector<Codeword>& codewords, const ConstellationTable& table);

}  // namespace egim
