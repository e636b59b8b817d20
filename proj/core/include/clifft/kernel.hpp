#ifndef CLIFFT_KERNEL_HPP
#define CLIFFT_KERNEL_HPP

#include <optional>
#include <span>

#include "clifft/algebra.hpp"
#include "clifft/specfun.hpp"

namespace clifft {

/// Derived pair (s, t) plus unit directions; every kernel formula is a
/// function of these. t^2 + s^2 = |x|^2 |y|^2 up to roundoff.
struct KernelArgs {
    double s = 0.0;  // <x, y>
    double t = 0.0;  // |x ^ y| = sqrt(|x|^2 |y|^2 - s^2)
    std::optional<Vector1> xi;   // x / |x|, unset when x = 0
    std::optional<Vector1> eta;  // y / |y|, unset when y = 0
    Multivector wedge_xy;        // grade-2, unnormalized

    static KernelArgs from(std::span<const double> x, std::span<const double> y,
                           CliffordDim dim);
};

/// Kernel value in compact form: K = scalar + (x ^ y) * wedge_coeff.
/// Real for even d on the closed path; the series path keeps complex
/// intermediates and reports its truncation diagnostics.
struct KernelSC {
    double scalar = 0.0;
    double wedge_coeff = 0.0;
};

struct KernelSeriesSC {
    Complex scalar{};
    Complex wedge_coeff{};
    int terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = true;
};

/// Closed-form K_- as a finite Bessel sum, valid for even d >= 2.
KernelSC kernel_minus_closed_sc(double s, double t, CliffordDim dim);
Multivector kernel_minus_closed(std::span<const double> x, std::span<const double> y,
                                CliffordDim dim);
inline Multivector kernel_minus_closed(const Vector1& x, const Vector1& y, CliffordDim dim) {
    return kernel_minus_closed(x.span(), y.span(), dim);
}

/// Gegenbauer-Bessel series form of K_-; requires d >= 4 (the printed series
/// coefficients have a Gamma(lambda) pole at d = 2).
KernelSeriesSC kernel_minus_series_sc(std::span<const double> x, std::span<const double> y,
                                      CliffordDim dim, double tol, int max_terms = 200);
Multivector kernel_minus_series(std::span<const double> x, std::span<const double> y,
                                CliffordDim dim, double tol);
inline Multivector kernel_minus_series(const Vector1& x, const Vector1& y, CliffordDim dim,
                                       double tol) {
    return kernel_minus_series(x.span(), y.span(), dim, tol);
}

/// K_+(x,y) = (K_-(x,-y))^c, complex conjugation of coefficients.
Multivector kernel_plus(std::span<const double> x, std::span<const double> y, CliffordDim dim);

/// tilde-K_sign(x,y) = (K_sign(x,y))^c; equals K_sign for even d where the
/// kernel is real.
Multivector kernel_tilde(std::span<const double> x, std::span<const double> y, CliffordDim dim,
                         Sign sign);

/// modulus(K_-(x,y)) / ((1+|x|)^lambda (1+|y|)^lambda).
double bound_ratio(std::span<const double> x, std::span<const double> y, CliffordDim dim);

namespace detail {

// d = 4 hot path: S = (1-s) v0(t), C = -s v1(t) where
// v0 = sin(t)/t and v1 = (sin t - t cos t)/t^3, series-expanded near t = 0.
inline void kernel_d4_sc(double s, double t2, double& S, double& C) {
    double v0, v1;
    if (t2 < 0.81) {
        v0 = 1.0 + t2 * (-1.0 / 6.0 + t2 * (1.0 / 120.0 + t2 * (-1.0 / 5040.0 +
             t2 * (1.0 / 362880.0 + t2 * (-1.0 / 39916800.0 +
             t2 * (1.0 / 6227020800.0 - t2 / 1307674368000.0))))));
        v1 = 1.0 / 3.0 + t2 * (-1.0 / 30.0 + t2 * (1.0 / 840.0 + t2 * (-1.0 / 45360.0 +
             t2 * (1.0 / 3991680.0 + t2 * (-1.0 / 518918400.0 +
             t2 * (1.0 / 93405312000.0 - t2 / 22230464256000.0))))));
    } else {
        double t = std::sqrt(t2);
        double st = std::sin(t), ct = std::cos(t);
        v0 = st / t;
        v1 = (st - t * ct) / (t2 * t);
    }
    S = (1.0 - s) * v0;
    C = -s * v1;
}

}  // namespace detail

}  // namespace clifft

#endif
