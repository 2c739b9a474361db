#include "egim/classical_im.hpp"

#include <stdexcept>

namespace egim {

void GroupSpec::validate() const {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("GroupSpec: need 0 <= k <= n");
    if (mod_order != 2 && mod_order != 4 && mod_order != 8)
        throw std::invalid_argument("GroupSpec: modulation order must be 2, 4 or 8");
}

CVec classical_im_map(BitQueue& bits, const GroupSpec& spec, int group_count) {
    spec.validate();
    const int p1 = spec.p1();
    const int bps = floor_log2(static_cast<uint64_t>(spec.mod_order));
    const size_t need = static_cast<size_t>(spec.bits_per_group()) * static_cast<size_t>(group_count);
    if (bits.remaining() < need)
        throw std::invalid_argument("classical_im_map: insufficient bits for frame");

    CVec frame(static_cast<size_t>(spec.n) * static_cast<size_t>(group_count), cplx(0, 0));
    for (int g = 0; g < group_count; ++g) {
        uint64_t rank = 0;
        for (int b = 0; b < p1; ++b) rank = (rank << 1) | bits.pop_or_pad();
        const auto active = combination_unrank(rank, spec.n, spec.k);
        for (int a : active) {
            uint8_t v = 0;
            for (int b = 0; b < bps; ++b) v = static_cast<uint8_t>((v << 1) | bits.pop_or_pad());
            frame[static_cast<size_t>(g) * spec.n + static_cast<size_t>(a)] =
                payload_point(spec.mod_order, v);
        }
    }
    return frame;
}

}  // namespace egim
