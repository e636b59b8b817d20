#ifndef CLIFFT_SPECFUN_HPP
#define CLIFFT_SPECFUN_HPP

#include <vector>

namespace clifft {

struct SpecFunConfig {
    double series_switch_t0 = 1.0;  // tilde-J switches from power series to J/t^alpha here
    int series_terms = 40;
    double tol = 1e-15;
};

/// Gamma function for x > 0. Throws std::domain_error at poles (x <= 0 integer).
double gamma_fn(double x);

/// Bessel function of the first kind J_alpha(t), alpha >= -1/2, t >= 0.
/// Half-integer orders route through closed trigonometric forms; other orders
/// use the ascending series for t <= 12 and a large-argument path above.
double bessel_j(double alpha, double t);

/// Normalized Bessel tilde-J_alpha(t) = t^{-alpha} J_alpha(t), continuous at t = 0
/// where it equals 1 / (2^alpha Gamma(alpha+1)).
double tilde_j(double alpha, double t);
double tilde_j(double alpha, double t, const SpecFunConfig& cfg);

/// J_{alpha0 + k}(t) for k = 0..count-1, integer alpha0 >= 0, by backward recurrence.
std::vector<double> bessel_j_family(int alpha0, int count, double t);

/// Gegenbauer polynomial C_k^lambda(u) by the three-term recurrence.
/// k = -1 returns 0 by convention.
double gegenbauer(int k, double lambda, double u);

/// Generalized Laguerre polynomial L_j^alpha(r) by recurrence.
double laguerre(int j, double alpha, double r);

}  // namespace clifft

#endif
