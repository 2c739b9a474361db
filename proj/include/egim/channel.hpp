#pragma once

#include "egim/constellation.hpp"
#include "egim/rng.hpp"

namespace egim {

/// Quasi-static multipath realization: L complex taps plus the matching
/// N-point frequency response (unnormalized DFT of the zero-padded taps).
struct ChannelRealization {
    std::vector<cplx> taps;
    CVec freq_response;

    static ChannelRealization flat(int n_fft);
};

/// Noise/SNR bookkeeping. n0 is the complex-sample noise variance; es is
/// the policy-dependent active-symbol energy, so snr_linear() = es/n0.
struct NoiseSpec {
    double n0 = 0.0;
    double es = 1.0;

    static NoiseSpec from_snr_db(double snr_db, double es);
    double snr_linear() const;
};

/// Rayleigh taps, iid circular Gaussian with variance 1/L each (uniform
/// power-delay profile, unit average energy). Throws when L < 1 or
/// L > cp_len (ISI would leak across frames).
ChannelRealization draw_channel(int taps, int n_fft, int cp_len, Rng& rng);

/// Linear convolution with the taps, truncated to the input length, plus
/// iid complex Gaussian noise of variance n0 per sample.
CVec propagate(const CVec& time, const ChannelRealization& ch, const NoiseSpec& noise, Rng& rng);

/// Per-subcarrier MMSE: Y*conj(H) / (|H|^2 + n0/es). Finite for H = 0.
CVec mmse_equalize(const CVec& freq, const ChannelRealization& ch, const NoiseSpec& noise);

}  // namespace egim
