#pragma once

#include <span>

#include "egim/classical_im.hpp"
#include "egim/constellation.hpp"

namespace egim {

/// Nearest table point in Euclidean distance; ties break toward the
/// smallest symbol index. EGIM symbols are independent across
/// subcarriers, so per-subcarrier minimization is frame ML.
Codeword ml_detect(cplx y, const ConstellationTable& table);

/// Index-of-table variant, for callers that need the point back.
int ml_detect_index(cplx y, const ConstellationTable& table);

/// Radius test of the paper's OOK detector model: inactive iff
/// |y| < radius. Note ml_detect's off region is the polygon bounded by
/// the half-planes toward each active point; it strictly contains this
/// disc, so the two agree on the disc but not everywhere outside it.
bool ook_active(cplx y, double threshold_radius);

/// Half the minimum origin-to-active distance.
double default_ook_radius(const ConstellationTable& table);

/// Max-log LLR for one codeword bit: (-1/sigma2) * (min distance^2 over
/// bit-0 points  -  min distance^2 over bit-1 points). Positive means
/// bit 0 is more likely. Throws for sigma2 <= 0.
double approx_llr(cplx y, double sigma2, const ConstellationTable& table, int bit_index);

/// All codeword_width() LLRs of one received symbol.
std::vector<double> llr_vector(cplx y, double sigma2, const ConstellationTable& table);

/// Nearest point of an arbitrary candidate set (e.g. the table scaled by
/// a channel coefficient); ties toward the smallest index.
int nearest_point(cplx y, std::span<const cplx> points);

/// Max-log LLR over an arbitrary candidate set; `packed[i]` holds the
/// `width`-bit label of points[i].
double llr_over_points(cplx y, double sigma2, std::span<const cplx> points,
                       std::span<const uint8_t> packed, int width, int bit_index);

struct SubblockDecision {
    uint64_t index_rank = 0;
    std::vector<uint8_t> bits;  // p1 rank bits then p2 payload bits
};

/// Exhaustive ML over the 2^p1 legal activation patterns x M^k payloads
/// of one classical OFDM-IM group. `active_scale` matches the transmit
/// policy scaling.
SubblockDecision subblock_ml_detect(std::span<const cplx> y, const GroupSpec& spec,
                                    double active_scale = 1.0);

}  // namespace egim
