#include "egim/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace egim {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Codeword codeword_from_bits(const std::vector<uint8_t>& bits) {
    Codeword cw;
    cw.width = static_cast<uint8_t>(bits.size());
    for (auto b : bits) cw.packed = static_cast<uint8_t>((cw.packed << 1) | (b & 1u));
    return cw;
}

std::string codeword_to_string(const Codeword& cw) {
    std::string s;
    for (int i = 0; i < cw.width; ++i) s.push_back(cw.bit(i) ? '1' : '0');
    return s;
}

cplx payload_point(int mod_order, uint8_t value) {
    switch (mod_order) {
        case 2:
            return value ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
        case 4: {
            // bit 0: negative real half-plane; bit 1: negative imag half-plane
            const double re = (value & 2u) ? -kInvSqrt2 : kInvSqrt2;
            const double im = (value & 1u) ? -kInvSqrt2 : kInvSqrt2;
            return {re, im};
        }
        case 8: {
            // MSB 0: axis points; MSB 1: diagonal points
            static const cplx axis[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            static const cplx diag[4] = {{kInvSqrt2, kInvSqrt2},
                                         {kInvSqrt2, -kInvSqrt2},
                                         {-kInvSqrt2, kInvSqrt2},
                                         {-kInvSqrt2, -kInvSqrt2}};
            return (value & 4u) ? diag[value & 3u] : axis[value & 3u];
        }
        default:
            throw std::invalid_argument("payload_point: unsupported modulation order");
    }
}

ConstellationTable ConstellationTable::egim_4qam() {
    ConstellationTable t;
    t.scheme_ = Scheme::egim_4qam;
    t.width_ = 3;
    const struct {
        uint8_t cw;
        cplx pt;
    } rows[] = {
        {0b000, {0, 0}},
        {0b100, {kInvSqrt2, kInvSqrt2}},
        {0b110, {-kInvSqrt2, kInvSqrt2}},
        {0b111, {-kInvSqrt2, -kInvSqrt2}},
        {0b101, {kInvSqrt2, -kInvSqrt2}},
    };
    for (const auto& r : rows) {
        t.codewords_.push_back({r.cw, 3});
        t.points_.push_back(r.pt);
    }
    return t;
}

ConstellationTable ConstellationTable::egim_8psk() {
    ConstellationTable t;
    t.scheme_ = Scheme::egim_8psk;
    t.width_ = 4;
    const struct {
        uint8_t cw;
        cplx pt;
    } rows[] = {
        {0b0000, {0, 0}},
        {0b1000, {1, 0}},
        {0b1001, {0, 1}},
        {0b1010, {-1, 0}},
        {0b1011, {0, -1}},
        {0b1100, {kInvSqrt2, kInvSqrt2}},
        {0b1110, {-kInvSqrt2, kInvSqrt2}},
        {0b1111, {-kInvSqrt2, -kInvSqrt2}},
        {0b1101, {kInvSqrt2, -kInvSqrt2}},
    };
    for (const auto& r : rows) {
        t.codewords_.push_back({r.cw, 4});
        t.points_.push_back(r.pt);
    }
    return t;
}

ConstellationTable ConstellationTable::scaled(double factor) const {
    ConstellationTable t = *this;
    for (size_t i = 1; i < t.points_.size(); ++i) t.points_[i] *= factor;
    return t;
}

int ConstellationTable::find(const Codeword& cw) const {
    if (cw.width != width_) return -1;
    for (size_t i = 0; i < codewords_.size(); ++i)
        if (codewords_[i].packed == cw.packed) return static_cast<int>(i);
    return -1;
}

cplx ConstellationTable::map(const Codeword& cw) const {
    const int i = find(cw);
    if (i < 0)
        throw std::invalid_argument("ConstellationTable::map: unknown codeword " +
                                    codeword_to_string(cw));
    return points_[static_cast<size_t>(i)];
}

double ConstellationTable::min_active_distance() const {
    double d = std::abs(points_[1]);
    for (size_t i = 2; i < points_.size(); ++i) d = std::min(d, std::abs(points_[i]));
    return d;
}

}  // namespace egim
