#include "clifft/quadrature.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Hermite nodes/weights for weight exp(-u^2) via Golub-Welsch.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(0.5 * k);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        weights[static_cast<std::size_t>(i)] = std::sqrt(kPi) * v0 * v0;
    }
    // enforce exact symmetry of the rule
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        double m = 0.5 * (nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)]);
        nodes[static_cast<std::size_t>(i)] = m;
        nodes[static_cast<std::size_t>(j)] = -m;
        double w = 0.5 * (weights[static_cast<std::size_t>(i)] + weights[static_cast<std::size_t>(j)]);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(j)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Sobol direction data (s, a, m...) for dimensions 2..17; dimension 1 is the
// van der Corput sequence.
struct SobolRow {
    int s;
    std::uint32_t a;
    std::uint32_t m[8];
};
constexpr SobolRow kSobol[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
    {6, 13, {1, 1, 1, 15, 21, 21}},
    {6, 16, {1, 3, 1, 13, 27, 49}},
    {6, 19, {1, 1, 1, 15, 7, 5}},
};
constexpr int kSobolMaxDim = 1 + static_cast<int>(sizeof(kSobol) / sizeof(kSobol[0]));

}  // namespace

void Grid::point(std::size_t i, std::span<double> out) const {
    std::size_t n = static_cast<std::size_t>(nodes_per_axis);
    for (int k = dim - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = axis_nodes[i % n];
        i /= n;
    }
    if (!offset.empty()) {
        for (int k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] += offset[static_cast<std::size_t>(k)];
    }
}

std::vector<double> Grid::point(std::size_t i) const {
    std::vector<double> p(static_cast<std::size_t>(dim));
    point(i, p);
    return p;
}

double Grid::weight(std::size_t i) const {
    std::size_t n = static_cast<std::size_t>(nodes_per_axis);
    double w = 1.0;
    for (int k = 0; k < dim; ++k) {
        w *= axis_weights[i % n];
        i /= n;
    }
    return w;
}

Grid build_grid(int dim, GridScheme scheme, int nodes_per_axis, double radius, double scale) {
    if (dim < 1) throw std::invalid_argument("build_grid: dim must be >= 1");
    if (nodes_per_axis < 2) throw std::invalid_argument("build_grid: nodes_per_axis must be >= 2");
    double cnt = std::pow(static_cast<double>(nodes_per_axis), dim);
    if (cnt > 1e7) {
        throw std::invalid_argument("build_grid: node count " + std::to_string(cnt) +
                                    " exceeds the 1e7 resource guard");
    }
    Grid g;
    g.dim = dim;
    g.scheme = scheme;
    g.nodes_per_axis = nodes_per_axis;
    g.radius = radius;
    g.scale = scale;
    std::size_t n = static_cast<std::size_t>(nodes_per_axis);
    if (scheme == GridScheme::HermiteWeighted) {
        std::vector<double> u, w;
        gauss_hermite(nodes_per_axis, u, w);
        g.axis_nodes.resize(n);
        g.axis_weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            g.axis_nodes[i] = scale * u[i];
            g.axis_weights[i] = scale * w[i] * std::exp(u[i] * u[i]);
        }
    } else {
        if (radius <= 0.0) throw std::invalid_argument("build_grid: trapezoid needs radius > 0");
        double h = 2.0 * radius / (nodes_per_axis - 1);
        g.axis_nodes.resize(n);
        g.axis_weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            g.axis_nodes[i] = -radius + h * static_cast<double>(i);
            g.axis_weights[i] = (i == 0 || i + 1 == n) ? 0.5 * h : h;
        }
    }
    g.count_ = 1;
    for (int k = 0; k < dim; ++k) g.count_ *= n;
    return g;
}

Grid gaussian_adapted_grid(std::span<const double> center, double a, int nodes_per_axis) {
    if (a <= 0.0) throw std::invalid_argument("gaussian_adapted_grid: precision must be > 0");
    Grid g = build_grid(static_cast<int>(center.size()), GridScheme::HermiteWeighted,
                        nodes_per_axis, 0.0, 1.0 / std::sqrt(a));
    g.offset.assign(center.begin(), center.end());
    return g;
}

Multivector integrate(const CliffordField& f, const Grid& grid) {
    if (grid.dim != f.dim().d()) throw std::invalid_argument("integrate: dimension mismatch");
    std::size_t n = grid.size();
    const std::size_t nchunks = 128;
    std::size_t chunk = (n + nchunks - 1) / nchunks;
    std::vector<Multivector> partial(nchunks, Multivector(f.dim()));
    std::string error;
    std::mutex err_mutex;
    parallel_for(
        n,
        [&](std::size_t begin, std::size_t end) {
            std::vector<double> p(static_cast<std::size_t>(grid.dim));
            for (std::size_t i = begin; i < end; ++i) {
                grid.point(i, p);
                try {
                    partial[i / chunk] += f(p) * Complex(grid.weight(i));
                } catch (const std::exception& e) {
                    std::lock_guard lock(err_mutex);
                    if (error.empty()) {
                        std::ostringstream os;
                        os << "integrate: evaluation failed at node (";
                        for (std::size_t k = 0; k < p.size(); ++k)
                            os << (k ? ", " : "") << p[k];
                        os << "): " << e.what();
                        error = os.str();
                    }
                }
            }
        },
        chunk);
    if (!error.empty()) throw std::runtime_error(error);
    Multivector sum(f.dim());
    for (const auto& m : partial) sum += m;
    return sum;
}

QmcSampler::QmcSampler(int dim, std::int64_t count, std::uint64_t seed)
    : dim_(dim), count_(count), seed_(seed) {
    if (dim < 1 || dim >= kSobolMaxDim) {
        throw std::invalid_argument("QmcSampler: dimension must be in [1, " +
                                    std::to_string(kSobolMaxDim - 1) + "]");
    }
    if (count < 1000) throw std::invalid_argument("QmcSampler: count must be >= 1000");
    dir_.assign(static_cast<std::size_t>(dim) * 32, 0);
    for (int d = 0; d < dim; ++d) {
        std::uint32_t* v = &dir_[static_cast<std::size_t>(d) * 32];
        if (d == 0) {
            for (int j = 0; j < 32; ++j) v[j] = 1u << (31 - j);
            continue;
        }
        const SobolRow& row = kSobol[d - 1];
        int s = row.s;
        for (int j = 0; j < s && j < 32; ++j) v[j] = row.m[j] << (31 - j);
        for (int j = s; j < 32; ++j) {
            std::uint32_t x = v[j - s] ^ (v[j - s] >> s);
            for (int k = 1; k < s; ++k) {
                if ((row.a >> (s - 1 - k)) & 1u) x ^= v[j - k];
            }
            v[j] = x;
        }
    }
    shift_.assign(static_cast<std::size_t>(dim), 0);
    std::uint64_t state = seed ^ 0xd1b54a32d192ed03ull;
    for (int d = 0; d < dim; ++d) {
        shift_[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(splitmix64(state) >> 32);
    }
}

void QmcSampler::point01(std::int64_t i, std::span<double> out) const {
    // Gray-code Sobol evaluated directly: x_i = XOR over set bits of gray(i)
    std::uint64_t g = static_cast<std::uint64_t>(i) ^ (static_cast<std::uint64_t>(i) >> 1);
    for (int d = 0; d < dim_; ++d) {
        std::uint32_t x = shift_[static_cast<std::size_t>(d)];
        const std::uint32_t* v = &dir_[static_cast<std::size_t>(d) * 32];
        std::uint64_t gg = g;
        int j = 0;
        while (gg) {
            if (gg & 1ull) x ^= v[j];
            gg >>= 1;
            ++j;
        }
        out[static_cast<std::size_t>(d)] =
            (static_cast<double>(x) + 0.5) * (1.0 / 4294967296.0);
    }
}

QmcResult qmc_integrate(CliffordDim dim_alg,
                        const std::function<Multivector(std::span<const double>)>& f,
                        const QmcSampler& sampler, QmcMap map, double sigma_or_radius) {
    std::int64_t n = sampler.count();
    int dim = sampler.dim();
    const std::size_t nchunks = 128;
    std::size_t chunk = (static_cast<std::size_t>(n) + nchunks - 1) / nchunks;
    std::vector<Multivector> partial_even(nchunks, Multivector(dim_alg));
    std::vector<Multivector> partial_odd(nchunks, Multivector(dim_alg));
    double sig = sigma_or_radius;
    double log_norm = dim * 0.5 * std::log(2.0 * kPi * sig * sig);
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t begin, std::size_t end) {
            std::vector<double> u(static_cast<std::size_t>(dim));
            std::vector<double> z(static_cast<std::size_t>(dim));
            for (std::size_t i = begin; i < end; ++i) {
                sampler.point01(static_cast<std::int64_t>(i), u);
                double w;
                if (map == QmcMap::GaussianWeight) {
                    double q = 0.0;
                    for (int k = 0; k < dim; ++k) {
                        double zk = sig * std::sqrt(2.0) *
                                    boost::math::erf_inv(2.0 * u[static_cast<std::size_t>(k)] - 1.0);
                        z[static_cast<std::size_t>(k)] = zk;
                        q += zk * zk;
                    }
                    w = std::exp(q / (2.0 * sig * sig) + log_norm);  // 1 / density
                } else {
                    double r = sigma_or_radius;
                    w = 1.0;
                    for (int k = 0; k < dim; ++k) {
                        z[static_cast<std::size_t>(k)] = -r + 2.0 * r * u[static_cast<std::size_t>(k)];
                        w *= 2.0 * r;
                    }
                }
                Multivector val = f(z) * Complex(w);
                if (i % 2 == 0) {
                    partial_even[i / chunk] += val;
                } else {
                    partial_odd[i / chunk] += val;
                }
            }
        },
        chunk);
    Multivector se(dim_alg), so(dim_alg);
    for (const auto& m : partial_even) se += m;
    for (const auto& m : partial_odd) so += m;
    Multivector total = se + so;
    double inv_n = 1.0 / static_cast<double>(n);
    QmcResult r{total * Complex(inv_n), 0.0};
    // half-sample spread as an empirical error bound
    Multivector diff = se * Complex(2.0 * inv_n) - so * Complex(2.0 * inv_n);
    r.error_estimate = 0.5 * modulus(diff);
    return r;
}

}  // namespace clifft
