#include "egim/ofdm.hpp"

#include <cmath>
#include <stdexcept>

namespace egim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

double policy_scale(PowerPolicy p) {
    return p == PowerPolicy::reinvest ? std::sqrt(2.0) : 1.0;
}

const char* policy_name(PowerPolicy p) {
    return p == PowerPolicy::reinvest ? "reinvest" : "power-saving";
}

OfdmModem::OfdmModem(int n_fft, int cp_len) : n_(n_fft), cp_(cp_len) {
    if (n_fft < 1) throw std::invalid_argument("OfdmModem: FFT size must be positive");
    if (cp_len < 0) throw std::invalid_argument("OfdmModem: negative cyclic prefix");
    if (is_pow2(n_)) {
        twiddle_.resize(static_cast<size_t>(n_) / 2);
        for (size_t i = 0; i < twiddle_.size(); ++i) {
            const double a = -kTwoPi * static_cast<double>(i) / n_;
            twiddle_[i] = {std::cos(a), std::sin(a)};
        }
    }
}

// Iterative radix-2 FFT for power-of-two sizes, direct DFT otherwise.
// Unitary either way: both directions carry 1/sqrt(N).
void OfdmModem::transform(CVec& x, bool inverse) const {
    const size_t n = x.size();
    if (is_pow2(static_cast<int>(n))) {
        for (size_t i = 1, j = 0; i < n; ++i) {
            size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(x[i], x[j]);
        }
        for (size_t len = 2; len <= n; len <<= 1) {
            const size_t stride = n / len;
            for (size_t i = 0; i < n; i += len) {
                for (size_t k = 0; k < len / 2; ++k) {
                    cplx w = twiddle_[k * stride];
                    if (inverse) w = std::conj(w);
                    const cplx u = x[i + k];
                    const cplx v = x[i + k + len / 2] * w;
                    x[i + k] = u + v;
                    x[i + k + len / 2] = u - v;
                }
            }
        }
    } else {
        CVec y(n, cplx(0, 0));
        const double sign = inverse ? 1.0 : -1.0;
        for (size_t f = 0; f < n; ++f) {
            for (size_t t = 0; t < n; ++t) {
                const double a = sign * kTwoPi * static_cast<double>(f * t % n) / static_cast<double>(n);
                y[f] += x[t] * cplx(std::cos(a), std::sin(a));
            }
        }
        x = std::move(y);
    }
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : x) v *= s;
}

CVec OfdmModem::modulate(const CVec& freq, PowerPolicy policy) const {
    if (static_cast<int>(freq.size()) != n_)
        throw std::invalid_argument("OfdmModem::modulate: frame length != FFT size");
    CVec body = freq;
    const double s = policy_scale(policy);
    if (s != 1.0)
        for (auto& v : body)
            if (v != cplx(0, 0)) v *= s;
    transform(body, true);
    CVec time;
    time.reserve(static_cast<size_t>(n_ + cp_));
    time.insert(time.end(), body.end() - cp_, body.end());
    time.insert(time.end(), body.begin(), body.end());
    return time;
}

CVec OfdmModem::demodulate(const CVec& time) const {
    if (static_cast<int>(time.size()) != n_ + cp_)
        throw std::invalid_argument("OfdmModem::demodulate: sample count != FFT size + CP");
    CVec body(time.begin() + cp_, time.end());
    transform(body, false);
    return body;
}

}  // namespace egim
