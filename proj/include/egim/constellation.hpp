#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace egim {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Fixed-width bit tuple naming one constellation point. Bit 0 is the
/// index (on/off) bit; the remaining log2(M) bits are the payload.
struct Codeword {
    uint8_t packed = 0;  // MSB-first, bit 0 of the codeword in the highest used position
    uint8_t width = 0;

    static Codeword off(int w) { return {0, static_cast<uint8_t>(w)}; }

    int bit(int i) const { return (packed >> (width - 1 - i)) & 1; }
    int index_bit() const { return bit(0); }
    uint8_t payload() const { return packed & ((1u << (width - 1)) - 1u); }

    bool operator==(const Codeword&) const = default;
};

Codeword codeword_from_bits(const std::vector<uint8_t>& bits);
std::string codeword_to_string(const Codeword& cw);

enum class Scheme { egim_4qam, egim_8psk };

/// Bijection codeword <-> complex point. Entry 0 is always the off point.
class ConstellationTable {
public:
    static ConstellationTable egim_4qam();
    static ConstellationTable egim_8psk();

    /// Same table with every active point multiplied by `factor`
    /// (reinvest detection table).
    ConstellationTable scaled(double factor) const;

    Scheme scheme() const { return scheme_; }
    int codeword_width() const { return width_; }
    int modulation_order() const { return static_cast<int>(points_.size()) - 1; }
    size_t size() const { return points_.size(); }

    const Codeword& codeword(size_t i) const { return codewords_[i]; }
    const cplx& point(size_t i) const { return points_[i]; }

    /// Exact lookup; throws std::invalid_argument for unknown codewords.
    cplx map(const Codeword& cw) const;

    /// Index of the entry holding `cw`, or -1.
    int find(const Codeword& cw) const;

    /// Smallest distance from the origin to any active point.
    double min_active_distance() const;

private:
    Scheme scheme_;
    int width_;
    std::vector<Codeword> codewords_;
    CVec points_;
};

/// Unit-power M-ary payload point for M in {2,4,8}; `value` holds the
/// payload bits MSB-first. M=4 and M=8 follow the active-point labelling
/// of the EGIM tables; M=2 is BPSK 0 -> +1, 1 -> -1.
cplx payload_point(int mod_order, uint8_t value);

}  // namespace egim
