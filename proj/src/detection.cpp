#include "egim/detection.hpp"

#include <limits>
#include <stdexcept>

namespace egim {

int ml_detect_index(cplx y, const ConstellationTable& table) {
    int best = 0;
    double best_d = std::norm(y - table.point(0));
    for (size_t i = 1; i < table.size(); ++i) {
        const double d = std::norm(y - table.point(i));
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

Codeword ml_detect(cplx y, const ConstellationTable& table) {
    return table.codeword(static_cast<size_t>(ml_detect_index(y, table)));
}

bool ook_active(cplx y, double threshold_radius) {
    if (threshold_radius <= 0.0) throw std::invalid_argument("ook_active: radius must be positive");
    return std::abs(y) >= threshold_radius;
}

double default_ook_radius(const ConstellationTable& table) {
    return 0.5 * table.min_active_distance();
}

double approx_llr(cplx y, double sigma2, const ConstellationTable& table, int bit_index) {
    if (sigma2 <= 0.0) throw std::invalid_argument("approx_llr: sigma2 must be positive");
    if (bit_index < 0 || bit_index >= table.codeword_width())
        throw std::invalid_argument("approx_llr: bit index out of range");
    double min0 = std::numeric_limits<double>::infinity();
    double min1 = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < table.size(); ++i) {
        const double d = std::norm(y - table.point(i));
        if (table.codeword(i).bit(bit_index))
            min1 = std::min(min1, d);
        else
            min0 = std::min(min0, d);
    }
    return (min1 - min0) / sigma2;  // = -(min0 - min1)/sigma2
}

std::vector<double> llr_vector(cplx y, double sigma2, const ConstellationTable& table) {
    std::vector<double> l(static_cast<size_t>(table.codeword_width()));
    for (int b = 0; b < table.codeword_width(); ++b)
        l[static_cast<size_t>(b)] = approx_llr(y, sigma2, table, b);
    return l;
}

int nearest_point(cplx y, std::span<const cplx> points) {
    int best = 0;
    double best_d = std::norm(y - points[0]);
    for (size_t i = 1; i < points.size(); ++i) {
        const double d = std::norm(y - points[i]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

double llr_over_points(cplx y, double sigma2, std::span<const cplx> points,
                       std::span<const uint8_t> packed, int width, int bit_index) {
    if (sigma2 <= 0.0) throw std::invalid_argument("llr_over_points: sigma2 must be positive");
    double min0 = std::numeric_limits<double>::infinity();
    double min1 = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < points.size(); ++i) {
        const double d = std::norm(y - points[i]);
        if ((packed[i] >> (width - 1 - bit_index)) & 1u)
            min1 = std::min(min1, d);
        else
            min0 = std::min(min0, d);
    }
    return (min1 - min0) / sigma2;
}

SubblockDecision subblock_ml_detect(std::span<const cplx> y, const GroupSpec& spec,
                                    double active_scale) {
    spec.validate();
    if (static_cast<int>(y.size()) != spec.n)
        throw std::invalid_argument("subblock_ml_detect: group size mismatch");
    const int p1 = spec.p1();
    const int bps = floor_log2(static_cast<uint64_t>(spec.mod_order));
    const uint64_t n_patterns = 1ull << p1;
    const uint64_t n_payloads = 1ull << (bps * spec.k);

    double best = std::numeric_limits<double>::infinity();
    uint64_t best_rank = 0, best_pay = 0;
    std::vector<int> active;
    for (uint64_t r = 0; r < n_patterns; ++r) {
        active = combination_unrank(r, spec.n, spec.k);
        for (uint64_t pay = 0; pay < n_payloads; ++pay) {
            double d = 0.0;
            int a = 0;
            for (int i = 0; i < spec.n; ++i) {
                cplx s(0, 0);
                if (a < spec.k && active[static_cast<size_t>(a)] == i) {
                    const auto v = static_cast<uint8_t>(
                        (pay >> (bps * (spec.k - 1 - a))) & ((1u << bps) - 1u));
                    s = payload_point(spec.mod_order, v) * active_scale;
                    ++a;
                }
                d += std::norm(y[static_cast<size_t>(i)] - s);
            }
            if (d < best) {
                best = d;
                best_rank = r;
                best_pay = pay;
            }
        }
    }

    SubblockDecision dec;
    dec.index_rank = best_rank;
    dec.bits.reserve(static_cast<size_t>(spec.bits_per_group()));
    for (int b = p1 - 1; b >= 0; --b) dec.bits.push_back((best_rank >> b) & 1u);
    for (int b = bps * spec.k - 1; b >= 0; --b) dec.bits.push_back((best_pay >> b) & 1u);
    return dec;
}

}  // namespace egim
