#ifndef CLIFFT_TRANSFORM_HPP
#define CLIFFT_TRANSFORM_HPP

#include <limits>
#include <memory>

#include "clifft/field.hpp"
#include "clifft/kernel.hpp"
#include "clifft/quadrature.hpp"

namespace clifft {

/// Field samples over the kept (non-negligible) nodes of a grid, split into
/// per-blade coefficient planes. The transform inner loops run on this.
struct SampledSignal {
    CliffordDim dim;
    std::vector<Blade> blades;
    std::vector<std::vector<double>> re;  // [blade][node]
    std::vector<std::vector<double>> im;  // empty when the field is real on the grid
    std::vector<double> pts;              // node coordinates, AoS
    std::vector<double> w;                // node weights
    std::vector<double> xx;               // |x|^2 per node
    std::size_t count = 0;

    bool is_real() const { return im.empty(); }
};

/// Evaluate f on all grid nodes and drop nodes whose weighted magnitude falls
/// below drop_tol times the largest one.
SampledSignal sample_on_grid(const CliffordField& f, const Grid& grid, double drop_tol = 1e-14);

/// (2 pi)^{-d/2} sum_i w_i K_sign(x_i, omega) f(x_i) over the sampled nodes.
/// `tilde` selects the inverse-transform kernel (complex conjugate; identical
/// numbers for even d where the kernel is real).
Multivector cft_eval_sampled(const SampledSignal& s, std::span<const double> omega, Sign sign,
                             bool tilde = false);

/// Clifford-Fourier transform F_sign f as a lazily evaluable field backed by
/// quadrature over `grid`; outputs are memoized per quantized point.
CliffordField cft(const CliffordField& f, Sign sign, const Grid& grid);

/// Inverse transform (tilde kernel path). F^{-1}_sign F_sign = Id on the
/// Schwartz-class samples used here.
CliffordField cft_inverse(const CliffordField& f, Sign sign, const Grid& grid);

/// Partial transform in the second variable: (x, omega) -> (2 pi)^{-d/2}
/// int K_-(t, omega) F(x, t) dt, with x carried as a parameter.
PairField partial_cft(const PairField& F, const Grid& grid);

/// <f, g> = int conj(f(x)) g(x) dx over the grid (Clifford-valued), optionally
/// restricted to nodes with |x|^2 <= r2max.
Multivector l2_inner(const CliffordField& f, const CliffordField& g, const Grid& grid,
                     double r2max = std::numeric_limits<double>::infinity());
double l2_norm(const CliffordField& f, const Grid& grid,
               double r2max = std::numeric_limits<double>::infinity());

/// Relative L2-on-grid distance sqrt(int |a-b|^2 / int |b|^2), restricted to
/// nodes with |x|^2 <= r2max. Field equality is always judged this way here.
double rel_l2_error(const CliffordField& a, const CliffordField& b, const Grid& grid,
                    double r2max = std::numeric_limits<double>::infinity());

}  // namespace clifft

#endif
