#pragma once

#include "egim/bits.hpp"
#include "egim/combinadic.hpp"
#include "egim/constellation.hpp"

namespace egim {

/// Sub-block parameters of the classical OFDM-IM mapper: k of n
/// subcarriers active, M-ary payload on the active ones.
struct GroupSpec {
    int n = 4;
    int k = 2;
    int mod_order = 4;

    int p1() const { return floor_log2(binomial(n, k)); }
    int p2() const { return k * floor_log2(static_cast<uint64_t>(mod_order)); }
    int bits_per_group() const { return p1() + p2(); }

    void validate() const;
};

/// Maps (p1+p2)*G bits onto G groups of n subcarriers: p1 bits select the
/// active pattern via combination_unrank (first-popped bit = MSB of the
/// rank), p2 bits fill the active subcarriers in ascending index order.
/// Throws std::invalid_argument when fewer bits remain.
CVec classical_im_map(BitQueue& bits, const GroupSpec& spec, int group_count);

}  // namespace egim
