#include "superstar/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace superstar::theory {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey). Relative error below 1e-13
// on the positive real axis.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: x must be positive");
    if (x < 0.5) {
        // reflection; only reached for arguments below 1/2
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double lambert_w0(double x) {
    if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("lambert_w0: x must be finite and >= 0");
    if (x == 0.0) return 0.0;
    double w = std::log1p(x);
    for (int iter = 0; iter < 64; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        // Halley step
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

double nu_sm(std::int64_t k, double p) {
    if (k < 1) throw std::invalid_argument("nu_sm: k must be >= 1");
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("nu_sm: p must be in [0,1)");
    const double c = (2.0 - p) / (1.0 - p);
    // c (k-1)! prod (i+c)^{-1} = c Gamma(k) Gamma(1+c) / Gamma(k+1+c)
    const double kk = static_cast<double>(k);
    return c * std::exp(log_gamma(kk) + log_gamma(1.0 + c) - log_gamma(kk + 1.0 + c));
}

double nu_pa(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("nu_pa: k must be >= 1");
    const double kk = static_cast<double>(k);
    return 4.0 / (kk * (kk + 1.0) * (kk + 2.0));
}

double p_geq_k_infty(std::int64_t k, double p) {
    if (k < 0) throw std::invalid_argument("p_geq_k_infty: k must be >= 0");
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p_geq_k_infty: p must be in [0,1)");
    if (k == 0) return 1.0;
    const double c = (2.0 - p) / (1.0 - p);
    const double kk = static_cast<double>(k);
    return std::exp(log_gamma(kk + 1.0) + log_gamma(1.0 + c) - log_gamma(kk + 1.0 + c));
}

ModelConstants constants(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("constants: p must be in (0,1)");
    ModelConstants mc;
    mc.p = p;
    mc.c = (2.0 - p) / (1.0 - p);
    mc.alpha = (3.0 - 2.0 * p) / (1.0 - p);
    mc.gamma = (1.0 - p) / (2.0 - p);
    mc.lambert_w_inv_e = lambert_w0(std::exp(-1.0));
    mc.height_const = (1.0 - p) / (mc.lambert_w_inv_e * (2.0 - p));
    mc.beta = mc.lambert_w_inv_e / (1.0 - p);
    mc.tail_const = mc.c * std::exp(log_gamma(mc.alpha));
    return mc;
}

} // namespace superstar::theory
