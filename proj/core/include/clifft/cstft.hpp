#ifndef CLIFFT_CSTFT_HPP
#define CLIFFT_CSTFT_HPP

#include "clifft/timefreq.hpp"

namespace clifft {

/// Radial window function. The square integral over the reference grid is
/// cached for reconstruction and reproducing-kernel paths.
class Window {
public:
    explicit Window(CliffordField g);
    const CliffordField& field() const { return g_; }
    CliffordDim dim() const { return g_.dim(); }
    /// int g^2(z) dz over `grid`, cached on first use.
    double square_integral(const Grid& grid) const;

private:
    CliffordField g_;
    mutable double l2sq_ = 0.0;
    mutable bool have_l2sq_ = false;
};

/// V_g f(x, omega) = (2 pi)^{-d/2} int K_-(t, omega) g(t-x) f(t) dt,
/// integrand ordered as printed (kernel, window value, then f).
Multivector vstft(const CliffordField& f, const Window& g, std::span<const double> x,
                  std::span<const double> omega, const Grid& grid);

/// Quadrature rule adapted to the combined gaussian envelopes of f and the
/// x-shifted window; falls back to `base` when envelopes are unknown.
Grid vstft_grid(const CliffordField& f, const Window& g, std::span<const double> x,
                const Grid& base, int adapted_n);

/// The defining integral plus the equivalent forms: conjugated
/// modulation-translation (imp), transformed-pair (F2), swapped-transform
/// minus commutator (FI), product-transform minus commutator (F5), and the
/// tensor form through the partial transform.
struct VstftForms {
    Multivector definition;
    Multivector imp;
    Multivector f2;
    Multivector fi;
    Multivector f5;
    Multivector tensor;
};
VstftForms vstft_forms(const CliffordField& f, const Window& g, const Vector1& x,
                       const Vector1& omega, const Grid& grid);

struct OrthogonalityResult {
    Multivector lhs;  // int int conj(V_{g1} f1) V_{g2} f2 domega dx
    Multivector rhs;  // <f1, f2> int g1 g2
    double rel_dev = 0.0;
    double qmc_error = 0.0;
};
OrthogonalityResult orthogonality_check(const CliffordField& f1, const CliffordField& f2,
                                        const Window& g1, const Window& g2,
                                        const QmcSampler& sampler, const Grid& grid,
                                        int adapted_n = 8, double qmc_sigma = 1.4142135623730951);

/// f(y) reconstructed as (1 / int g^2) int int M_omega tau_x g(y) V_g f(x, omega).
Multivector reconstruct(const CliffordField& f, const Window& g, std::span<const double> y,
                        const QmcSampler& sampler, const Grid& grid, int adapted_n = 8,
                        double qmc_sigma = 1.4142135623730951);

struct ReproducingKernelArgs {
    Vector1 omega, x, omega_prime, x_prime;
};

/// K_g(omega, x; omega', x') by a single quadrature of the printed integrand.
Multivector reproducing_kernel(const Window& g, const ReproducingKernelArgs& args,
                               const Grid& grid);

/// RHS of the reproducing property: int int K_g(omega,x;omega',x') V_g f domega dx.
Multivector reproduce_vstft(const CliffordField& f, const Window& g,
                            std::span<const double> x_prime, std::span<const double> omega_prime,
                            const QmcSampler& sampler, const Grid& grid, int adapted_n = 8,
                            double qmc_sigma = 1.4142135623730951);

}  // namespace clifft

#endif
