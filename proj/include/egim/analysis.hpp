#pragma once

#include <functional>

namespace egim {

/// Gaussian tail Q(x).
double q_func(double x);

/// SER of the on/off decision over Rayleigh fading,
/// 1/2 (1 - sqrt(0.5 g / (1 + 0.5 g))); equals E[Q(sqrt(gamma))] over an
/// exponential gamma with mean g (the half-SNR argument accounts for the
/// half transmit power of the on/off alphabet).
double p_ook(double gbar);

/// 4QAM SER over Rayleigh: E[2Q(sqrt(g)) - Q^2(sqrt(g))] in closed form,
/// 3/4 - mu/2 - (mu/pi) atan(mu) with mu = sqrt(g/(2+g)). The literature
/// form this simulator inherited printed a negative expression; the
/// quadrature oracle is authoritative and this matches it exactly.
double p_qam4_rayleigh(double gbar);

/// M-PSK SER over Rayleigh,
/// (M-1)/M - (mu/pi) (pi/2 + atan(mu cot(pi/M))),
/// mu = sqrt(g s2/(1+g s2)), s2 = sin^2(pi/M). Reduces to the BPSK form
/// at M = 2. M must be a power of two >= 2.
double p_mpsk_rayleigh(double gbar, int mod_order);

/// Mixture SER of the bit-stuffed schemes: equal-probability on/off and
/// active-symbol error components.
double ser_egim_4qam(double gbar);
double ser_egim_8psk(double gbar);

/// Bits per subcarrier: (floor(log2 C(n,k)) + k log2 M)/n for the
/// classical mapper, 1 + log2(M)/2 lower bound for EGIM.
double se_classical(int n, int k, int mod_order);
double se_egim(int mod_order);

/// Conditional (AWGN) SER at instantaneous SNR g, for the oracle.
double cond_ser_ook(double g);
double cond_ser_qam4(double g);
/// Exact M-PSK conditional SER via the Craig integral.
double cond_ser_mpsk(double g, int mod_order);

/// Independent validation route: adaptive-Simpson integration of
/// cond(g) * (1/gbar) exp(-g/gbar) over g in [0, 40 gbar], absolute
/// tolerance 1e-9 (cond(0) exactly at gbar = 0).
double rayleigh_quadrature_ser(const std::function<double(double)>& cond, double gbar);

}  // namespace egim
