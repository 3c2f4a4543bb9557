#ifndef SUPERSTAR_THEORY_HPP
#define SUPERSTAR_THEORY_HPP

#include <cstdint>

namespace superstar::theory {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

// Principal-branch Lambert W on [0, inf): w >= 0 with w e^w = x,
// Halley iteration from w0 = log(1 + x).
double lambert_w0(double x);

// Limit degree pmf of the superstar model:
//   nu_sm(k, p) = c (k-1)! prod_{i=1..k} (i + c)^{-1},  c = (2-p)/(1-p),
// evaluated in log space. p = 0 is admitted (reduces to nu_pa).
double nu_sm(std::int64_t k, double p);

// Limit degree pmf of preferential attachment: 4 / (k (k+1) (k+2)).
double nu_pa(std::int64_t k);

// Limit fraction of vertices with at least k blue children:
//   k = 0 -> 1, else k! prod_{i=1..k} (i + c)^{-1}.
double p_geq_k_infty(std::int64_t k, double p);

struct ModelConstants {
    double p;
    double c;                 // (2-p)/(1-p)
    double alpha;             // tail exponent (3-2p)/(1-p) = 1 + c
    double gamma;             // max-degree exponent (1-p)/(2-p)
    double lambert_w_inv_e;   // W(1/e)
    double height_const;      // (1-p)/(W(1/e)(2-p))
    double beta;              // first-birth slope W(1/e)/(1-p)
    double tail_const;        // c * Gamma(alpha)
};

ModelConstants constants(double p);

} // namespace superstar::theory

#endif
