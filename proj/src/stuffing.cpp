#include "egim/stuffing.hpp"

#include <stdexcept>

namespace egim {

namespace {

int payload_width(int mod_order) {
    switch (mod_order) {
        case 4: return 2;
        case 8: return 3;
        default: throw std::invalid_argument("stuffing: modulation order must be 4 or 8");
    }
}

}  // namespace

StuffResult stuff(BitQueue& bits, int mod_order, size_t count) {
    const int pw = payload_width(mod_order);
    const int width = 1 + pw;
    StuffResult r;
    r.codewords.reserve(count);
    bits.reset_pad_count();
    size_t popped = 0;
    for (size_t i = 0; i < count; ++i) {
        Codeword cw;
        cw.width = static_cast<uint8_t>(width);
        const uint8_t head = bits.pop_or_pad();
        ++popped;
        if (head == 0) {
            cw.packed = 0;
        } else {
            uint8_t v = 1;
            for (int b = 0; b < pw; ++b) {
                v = static_cast<uint8_t>((v << 1) | bits.pop_or_pad());
                ++popped;
            }
            cw.packed = v;
        }
        r.codewords.push_back(cw);
    }
    r.pad_bits = bits.pad_count();
    r.bits_consumed = popped - r.pad_bits;
    return r;
}

BitVec destuff(const std::vector<Codeword>& codewords, int mod_order) {
    const int pw = payload_width(mod_order);
    BitVec out;
    out.reserve(codewords.size() * (1 + static_cast<size_t>(pw)));
    for (const auto& cw : codewords) {
        if (cw.width != pw + 1)
            throw std::invalid_argument("destuff: codeword width does not match modulation order");
        if (cw.index_bit() == 0) {
            if (cw.payload() != 0)
                throw std::invalid_argument("destuff: invalid codeword " + codeword_to_string(cw) +
                                            " (index bit 0 with nonzero payload)");
            out.push_back(0);
        } else {
            out.push_back(1);
            for (int b = 1; b <= pw; ++b) out.push_back(static_cast<uint8_t>(cw.bit(b)));
        }
    }
    return out;
}

CVec map_codewords(const std::vector<Codeword>& codewords, const ConstellationTable& table) {
    CVec out;
    out.reserve(codewords.size());
    for (const auto& cw : codewords) out.push_back(table.map(cw));
    return out;
}

}  // namespace egim
