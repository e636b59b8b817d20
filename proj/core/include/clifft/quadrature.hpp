#ifndef CLIFFT_QUADRATURE_HPP
#define CLIFFT_QUADRATURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "clifft/algebra.hpp"
#include "clifft/field.hpp"

namespace clifft {

enum class GridScheme { HermiteWeighted, TrapezoidBox };

/// Tensor-product quadrature over R^dim: sum_i weight(i) * f(point(i)) ~ int f dx.
/// Hermite-weighted nodes absorb the exp(+u^2) factor into the weights, so the
/// rule integrates exp(-|x/scale|^2) * poly exactly; trapezoid-box covers
/// generic decaying integrands on [-radius, radius]^dim.
class Grid {
public:
    int dim = 0;
    GridScheme scheme = GridScheme::HermiteWeighted;
    int nodes_per_axis = 0;
    double radius = 0.0;  // box half-width (trapezoid only)
    double scale = 1.0;   // hermite node scaling

    std::vector<double> axis_nodes;
    std::vector<double> axis_weights;
    std::vector<double> offset;  // optional per-axis recentering, empty = origin

    std::size_t size() const { return count_; }
    void point(std::size_t i, std::span<double> out) const;
    std::vector<double> point(std::size_t i) const;
    double weight(std::size_t i) const;

    friend Grid build_grid(int dim, GridScheme scheme, int nodes_per_axis, double radius,
                           double scale);

private:
    std::size_t count_ = 0;
};

/// Deterministic grid construction. Hermite nodes come from the symmetric
/// Jacobi-matrix eigenproblem; node count above 10^7 is rejected.
Grid build_grid(int dim, GridScheme scheme, int nodes_per_axis, double radius = 0.0,
                double scale = 1.0);

/// Hermite rule with nodes recentered at `center` and gaussian precision `a`
/// (integrand should decay like exp(-a |x - center|^2)).
Grid gaussian_adapted_grid(std::span<const double> center, double a, int nodes_per_axis);

/// sum_i w_i f(x_i), componentwise over blades; linear in f. Evaluation
/// failures surface with the offending node location attached.
Multivector integrate(const CliffordField& f, const Grid& grid);

/// Sobol low-discrepancy sampler with a seed-derived digital shift.
class QmcSampler {
public:
    QmcSampler(int dim, std::int64_t count, std::uint64_t seed);

    int dim() const { return dim_; }
    std::int64_t count() const { return count_; }
    std::uint64_t seed() const { return seed_; }

    /// i-th point of the scrambled sequence, components in (0,1).
    void point01(std::int64_t i, std::span<double> out) const;

private:
    int dim_;
    std::int64_t count_;
    std::uint64_t seed_;
    std::vector<std::uint32_t> dir_;    // [dim][32] direction integers
    std::vector<std::uint32_t> shift_;  // per-dimension digital shift
};

enum class QmcMap { GaussianWeight, Box };

struct QmcResult {
    Multivector estimate;
    double error_estimate = 0.0;  // empirical half-sample bound
};

/// Quasi-random integral of f over R^dim. GaussianWeight maps (0,1)^dim through
/// the normal quantile with the given sigma and divides by the density; Box
/// maps onto [-box_radius, box_radius]^dim with the volume factor.
QmcResult qmc_integrate(
    CliffordDim dim_alg,
    const std::function<Multivector(std::span<const double>)>& f,
    const QmcSampler& sampler, QmcMap map, double sigma_or_radius);

}  // namespace clifft

#endif
