#include "egim/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "egim/combinadic.hpp"

namespace egim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

void check_gbar(double gbar) {
    if (gbar < 0.0 || !std::isfinite(gbar))
        throw std::invalid_argument("analysis: average SNR must be finite and non-negative");
}

void check_mpsk_order(int m) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw std::invalid_argument("analysis: M must be a power of two >= 2");
}

// Adaptive Simpson with explicit error control.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int initial_panels = 64) {
    // seed with uniform panels so narrow features near the left edge are
    // not skipped over by the first coarse estimate
    double total = 0.0;
    const double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
        const double f0 = f(x0), f1 = f(x1), fm = f(xm);
        const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += simpson(f, x0, x1, f0, fm, f1, whole, tol / initial_panels, 48);
    }
    return total;
}

}  // namespace

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double p_ook(double gbar) {
    check_gbar(gbar);
    const double x = 0.5 * gbar;
    return 0.5 * (1.0 - std::sqrt(x / (1.0 + x)));
}

double p_qam4_rayleigh(double gbar) {
    check_gbar(gbar);
    const double mu = std::sqrt(gbar / (2.0 + gbar));
    return 0.75 - 0.5 * mu - (mu / kPi) * std::atan(mu);
}

double p_mpsk_rayleigh(double gbar, int mod_order) {
    check_gbar(gbar);
    check_mpsk_order(mod_order);
    const double s2 = std::pow(std::sin(kPi / mod_order), 2);
    const double mu = std::sqrt(gbar * s2 / (1.0 + gbar * s2));
    const double cot = std::cos(kPi / mod_order) / std::sin(kPi / mod_order);
    return (mod_order - 1.0) / mod_order - (mu / kPi) * (kPi / 2.0 + std::atan(mu * cot));
}

double ser_egim_4qam(double gbar) { return 0.5 * p_ook(gbar) + 0.5 * p_qam4_rayleigh(gbar); }

double ser_egim_8psk(double gbar) { return 0.5 * p_ook(gbar) + 0.5 * p_mpsk_rayleigh(gbar, 8); }

double se_classical(int n, int k, int mod_order) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("se_classical: need 0 <= k <= n");
    check_mpsk_order(mod_order);
    const double p1 = floor_log2(binomial(n, k));
    const double p2 = k * floor_log2(static_cast<uint64_t>(mod_order));
    return (p1 + p2) / n;
}

double se_egim(int mod_order) {
    check_mpsk_order(mod_order);
    return 1.0 + 0.5 * floor_log2(static_cast<uint64_t>(mod_order));
}

double cond_ser_ook(double g) { return q_func(std::sqrt(g)); }

double cond_ser_qam4(double g) {
    const double q = q_func(std::sqrt(g));
    return 2.0 * q - q * q;
}

double cond_ser_mpsk(double g, int mod_order) {
    check_mpsk_order(mod_order);
    const double s2 = std::pow(std::sin(kPi / mod_order), 2);
    const auto f = [&](double theta) {
        const double s = std::sin(theta);
        return std::exp(-g * s2 / (s * s));
    };
    const double upper = kPi * (mod_order - 1.0) / mod_order;
    return integrate(f, 1e-12, upper, 1e-13, 32) / kPi;
}

double rayleigh_quadrature_ser(const std::function<double(double)>& cond, double gbar) {
    check_gbar(gbar);
    if (gbar == 0.0) return cond(0.0);
    const auto f = [&](double g) { return cond(g) * std::exp(-g / gbar) / gbar; };
    return integrate(f, 0.0, 40.0 * gbar, 1e-10, 128);
}

}  // namespace egim
