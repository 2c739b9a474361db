#pragma once

#include "egim/constellation.hpp"

namespace egim {

/// power_saving leaves active symbols at unit energy (half total frame
/// power for EGIM, the paper's default); reinvest scales them by sqrt(2)
/// so the average frame power matches an all-active system.
enum class PowerPolicy { power_saving, reinvest };

double policy_scale(PowerPolicy p);
const char* policy_name(PowerPolicy p);

/// Frequency <-> time conversion with a unitary transform and cyclic
/// prefix. The IDFT/DFT pair is unitary (1/sqrt(N) both ways), so no
/// k-dependent rescaling is needed at the receiver.
class OfdmModem {
public:
    OfdmModem(int n_fft, int cp_len);

    int n_fft() const { return n_; }
    int cp_len() const { return cp_; }

    /// Scales nonzero symbols per the policy, unitary IDFT, prepends the
    /// cyclic prefix. Throws on wrong frame length.
    CVec modulate(const CVec& freq, PowerPolicy policy) const;

    /// Strips the CP and applies the unitary DFT. No policy un-scaling;
    /// the detector works against the scaled table.
    CVec demodulate(const CVec& time) const;

private:
    void transform(CVec& x, bool inverse) const;

    int n_;
    int cp_;
    CVec twiddle_;  // forward twiddles for power-of-two n_
};

}  // namespace egim
