#include "egim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace egim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

CVec taps_to_freq(const std::vector<cplx>& taps, int n_fft) {
    CVec h(static_cast<size_t>(n_fft), cplx(0, 0));
    for (int f = 0; f < n_fft; ++f) {
        for (size_t l = 0; l < taps.size(); ++l) {
            const double a = -kTwoPi * static_cast<double>(f) * static_cast<double>(l) / n_fft;
            h[static_cast<size_t>(f)] += taps[l] * cplx(std::cos(a), std::sin(a));
        }
    }
    return h;
}
}  // namespace

ChannelRealization ChannelRealization::flat(int n_fft) {
    ChannelRealization ch;
    ch.taps = {cplx(1, 0)};
    ch.freq_response.assign(static_cast<size_t>(n_fft), cplx(1, 0));
    return ch;
}

NoiseSpec NoiseSpec::from_snr_db(double snr_db, double es) {
    NoiseSpec s;
    s.es = es;
    s.n0 = es * std::pow(10.0, -snr_db / 10.0);
    return s;
}

double NoiseSpec::snr_linear() const {
    if (n0 <= 0.0) return std::numeric_limits<double>::infinity();
    return es / n0;
}

ChannelRealization draw_channel(int taps, int n_fft, int cp_len, Rng& rng) {
    if (taps < 1) throw std::invalid_argument("draw_channel: need at least one tap");
    if (taps > cp_len)
        throw std::invalid_argument("draw_channel: tap count exceeds cyclic prefix length");
    ChannelRealization ch;
    ch.taps.resize(static_cast<size_t>(taps));
    const double sigma = std::sqrt(0.5 / taps);  // per dimension, E[sum |tap|^2] = 1
    for (auto& t : ch.taps) t = {sigma * rng.gaussian(), sigma * rng.gaussian()};
    ch.freq_response = taps_to_freq(ch.taps, n_fft);
    return ch;
}

CVec propagate(const CVec& time, const ChannelRealization& ch, const NoiseSpec& noise, Rng& rng) {
    const size_t n = time.size();
    CVec out(n, cplx(0, 0));
    for (size_t t = 0; t < n; ++t) {
        cplx acc(0, 0);
        const size_t lmax = std::min(ch.taps.size() - 1, t);
        for (size_t l = 0; l <= lmax; ++l) acc += ch.taps[l] * time[t - l];
        out[t] = acc;
    }
    if (noise.n0 > 0.0) {
        const double sigma = std::sqrt(noise.n0 / 2.0);
        for (auto& v : out) v += cplx(sigma * rng.gaussian(), sigma * rng.gaussian());
    }
    return out;
}

CVec mmse_equalize(const CVec& freq, const ChannelRealization& ch, const NoiseSpec& noise) {
    if (freq.size() != ch.freq_response.size())
        throw std::invalid_argument("mmse_equalize: frame/channel size mismatch");
    const double reg = noise.es > 0.0 ? noise.n0 / noise.es : 0.0;
    CVec out(freq.size());
    for (size_t i = 0; i < freq.size(); ++i) {
        const cplx h = ch.freq_response[i];
        const double denom = std::norm(h) + reg;
        out[i] = denom > 0.0 ? freq[i] * std::conj(h) / denom : cplx(0, 0);
    }
    return out;
}

}  // namespace egim
