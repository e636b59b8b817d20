#include "clifft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

double two_pi_pow(int d) { return std::pow(2.0 * kPi, -0.5 * d); }

// Accumulates sum_i w_i K(x_i, omega) p(x_i) for one set of real planes.
// K = S + (x ^ omega) C; the wedge part is folded through the moment sums
// A[i][b] = sum w C x_i p_b, giving sum C (x^omega) p = sum_{i<j} e_ij
// (omega_j A[i][b] - omega_i A[j][b]) e_b.
void accumulate_real(const SampledSignal& s, std::span<const double> omega, bool flip_y,
                     const std::vector<std::vector<double>>& planes,
                     std::vector<double>& acc_scalar, std::vector<double>& acc_moment) {
    const int d = s.dim.d();
    const std::size_t m = planes.size();
    const double sgn_y = flip_y ? -1.0 : 1.0;
    double ww = 0.0;
    for (int k = 0; k < d; ++k) ww += omega[static_cast<std::size_t>(k)] * omega[static_cast<std::size_t>(k)];
    acc_scalar.assign(m, 0.0);
    acc_moment.assign(m * static_cast<std::size_t>(d), 0.0);
    const bool d4 = (d == 4);
    for (std::size_t i = 0; i < s.count; ++i) {
        const double* x = &s.pts[i * static_cast<std::size_t>(d)];
        double sdot = 0.0;
        for (int k = 0; k < d; ++k) sdot += x[k] * omega[static_cast<std::size_t>(k)];
        sdot *= sgn_y;
        double t2 = std::max(s.xx[i] * ww - sdot * sdot, 0.0);
        double S, C;
        if (d4) {
            detail::kernel_d4_sc(sdot, t2, S, C);
        } else {
            KernelSC k = kernel_minus_closed_sc(sdot, std::sqrt(t2), s.dim);
            S = k.scalar;
            C = k.wedge_coeff;
        }
        const double wS = s.w[i] * S;
        const double wC = s.w[i] * C * sgn_y;  // wedge(x, sgn*omega) = sgn * wedge(x, omega)
        for (std::size_t b = 0; b < m; ++b) {
            const double pb = planes[b][i];
            acc_scalar[b] += wS * pb;
            const double qb = wC * pb;
            double* A = &acc_moment[b * static_cast<std::size_t>(d)];
            for (int k = 0; k < d; ++k) A[k] += qb * x[k];
        }
    }
}

Multivector assemble(const SampledSignal& s, std::span<const double> omega,
                     const std::vector<double>& acc_scalar,
                     const std::vector<double>& acc_moment, Complex plane_unit) {
    const int d = s.dim.d();
    Multivector out(s.dim);
    for (std::size_t b = 0; b < s.blades.size(); ++b) {
        if (acc_scalar[b] != 0.0) out.add_coeff(s.blades[b], plane_unit * acc_scalar[b]);
        const double* A = &acc_moment[b * static_cast<std::size_t>(d)];
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                double c = omega[static_cast<std::size_t>(j)] * A[i] -
                           omega[static_cast<std::size_t>(i)] * A[j];
                if (c == 0.0) continue;
                Blade biv = (Blade{1u} << i) | (Blade{1u} << j);
                auto [sign, blade] = blade_mul(biv, s.blades[b]);
                out.add_coeff(blade, plane_unit * (sign * c));
            }
        }
    }
    return out;
}

}  // namespace

SampledSignal sample_on_grid(const CliffordField& f, const Grid& grid, double drop_tol) {
    if (grid.dim != f.dim().d()) throw std::invalid_argument("sample_on_grid: dimension mismatch");
    const std::size_t n = grid.size();
    const int d = grid.dim;
    // envelope pre-skip: exp(-a r^2) below 1e-20 cannot survive the drop cut
    double env_a = 0.0;
    std::vector<double> env_c;
    if (f.envelope() && f.envelope()->a > 0.0) {
        env_a = f.envelope()->a;
        env_c = f.envelope()->center;
    }
    std::vector<Multivector> vals(n, Multivector(f.dim()));
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        std::vector<double> p(static_cast<std::size_t>(d));
        for (std::size_t i = begin; i < end; ++i) {
            grid.point(i, p);
            if (env_a > 0.0) {
                double r2 = 0.0;
                for (int k = 0; k < d; ++k) {
                    double dx = p[static_cast<std::size_t>(k)] -
                                (env_c.empty() ? 0.0 : env_c[static_cast<std::size_t>(k)]);
                    r2 += dx * dx;
                }
                if (env_a * r2 > 46.0) continue;
            }
            vals[i] = f(p);
        }
    });
    // blade union and weighted magnitudes
    std::vector<Blade> blades;
    std::vector<double> mag(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double wi = std::abs(grid.weight(i));
        for (const auto& [b, c] : vals[i].terms()) {
            mag[i] += wi * std::abs(c);
            if (!std::binary_search(blades.begin(), blades.end(), b)) {
                blades.insert(std::upper_bound(blades.begin(), blades.end(), b), b);
            }
        }
    }
    double maxmag = 0.0;
    for (double v : mag) maxmag = std::max(maxmag, v);
    double cut = drop_tol * maxmag;

    SampledSignal s{.dim = f.dim(), .blades = blades, .re = {}, .im = {},
                    .pts = {}, .w = {}, .xx = {}, .count = 0};
    bool any_imag = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (vals[i].max_abs_imag() > 0.0) any_imag = true;
    }
    s.re.assign(blades.size(), {});
    if (any_imag) s.im.assign(blades.size(), {});
    std::vector<double> p(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
        if (mag[i] <= cut) continue;
        grid.point(i, p);
        double xx = 0.0;
        for (double v : p) xx += v * v;
        s.pts.insert(s.pts.end(), p.begin(), p.end());
        s.w.push_back(grid.weight(i));
        s.xx.push_back(xx);
        for (std::size_t b = 0; b < blades.size(); ++b) {
            Complex c = vals[i].coeff(blades[b]);
            s.re[b].push_back(c.real());
            if (any_imag) s.im[b].push_back(c.imag());
        }
        ++s.count;
    }
    return s;
}

Multivector cft_eval_sampled(const SampledSignal& s, std::span<const double> omega, Sign sign,
                             bool tilde) {
    if (static_cast<int>(omega.size()) != s.dim.d()) {
        throw std::invalid_argument("cft_eval_sampled: dimension mismatch");
    }
    // K_+(x,y) = (K_-(x,-y))^c and tilde-K = K^c; the kernel is real for even d,
    // so conjugation only acts on complex sample planes.
    const bool flip = (sign == Sign::Plus);
    (void)tilde;
    const double norm = two_pi_pow(s.dim.d());
    std::vector<double> acc_s, acc_m;
    accumulate_real(s, omega, flip, s.re, acc_s, acc_m);
    Multivector out = assemble(s, omega, acc_s, acc_m, Complex{norm, 0.0});
    if (!s.is_real()) {
        accumulate_real(s, omega, flip, s.im, acc_s, acc_m);
        out += assemble(s, omega, acc_s, acc_m, Complex{0.0, norm});
    }
    return out;
}

CliffordField cft(const CliffordField& f, Sign sign, const Grid& grid) {
    auto samples = std::make_shared<SampledSignal>(sample_on_grid(f, grid));
    CliffordField out(
        f.dim(),
        [samples, sign](std::span<const double> omega) {
            return cft_eval_sampled(*samples, omega, sign);
        },
        f.radial());
    // the exp(-|x|^2/2) class is its own image under the transform
    if (f.envelope() && f.envelope()->a == 0.5) {
        bool origin = true;
        for (double c : f.envelope()->center) origin = origin && c == 0.0;
        if (origin) out.set_envelope(*f.envelope());
    }
    return out;
}

CliffordField cft_inverse(const CliffordField& f, Sign sign, const Grid& grid) {
    auto samples = std::make_shared<SampledSignal>(sample_on_grid(f, grid));
    CliffordField out(
        f.dim(),
        [samples, sign](std::span<const double> omega) {
            return cft_eval_sampled(*samples, omega, sign, /*tilde=*/true);
        },
        f.radial());
    if (f.envelope() && f.envelope()->a == 0.5) {
        bool origin = true;
        for (double c : f.envelope()->center) origin = origin && c == 0.0;
        if (origin) out.set_envelope(*f.envelope());
    }
    return out;
}

PairField partial_cft(const PairField& F, const Grid& grid) {
    CliffordDim dim = F.dim();
    if (grid.dim != dim.d()) throw std::invalid_argument("partial_cft: dimension mismatch");
    double norm = two_pi_pow(dim.d());
    return PairField(dim, [F, grid, norm, dim](std::span<const double> x,
                                               std::span<const double> omega) {
        // x is a parameter; integrate K_-(t, omega) F(x, t) over t
        std::vector<double> t(static_cast<std::size_t>(grid.dim));
        Multivector acc(dim);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.point(i, t);
            Multivector k = kernel_minus_closed(t, omega, dim);
            acc += geometric_product(k, F(x, t)) * Complex(grid.weight(i));
        }
        return acc * Complex(norm);
    });
}

Multivector l2_inner(const CliffordField& f, const CliffordField& g, const Grid& grid,
                     double r2max) {
    if (f.dim() != g.dim()) throw std::invalid_argument("l2_inner: dimension mismatch");
    const std::size_t n = grid.size();
    const std::size_t nchunks = 128;
    std::size_t chunk = (n + nchunks - 1) / nchunks;
    std::vector<Multivector> partial(nchunks, Multivector(f.dim()));
    parallel_for(
        n,
        [&](std::size_t begin, std::size_t end) {
            std::vector<double> p(static_cast<std::size_t>(grid.dim));
            for (std::size_t i = begin; i < end; ++i) {
                grid.point(i, p);
                if (inner(p, p) > r2max) continue;
                partial[i / chunk] +=
                    geometric_product(clifford_conjugate(f(p)), g(p)) * Complex(grid.weight(i));
            }
        },
        chunk);
    Multivector sum(f.dim());
    for (const auto& m : partial) sum += m;
    return sum;
}

double l2_norm(const CliffordField& f, const Grid& grid, double r2max) {
    const std::size_t n = grid.size();
    const std::size_t nchunks = 128;
    std::size_t chunk = (n + nchunks - 1) / nchunks;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(
        n,
        [&](std::size_t begin, std::size_t end) {
            std::vector<double> p(static_cast<std::size_t>(grid.dim));
            for (std::size_t i = begin; i < end; ++i) {
                grid.point(i, p);
                if (inner(p, p) > r2max) continue;
                double m = modulus(f(p));
                partial[i / chunk] += grid.weight(i) * m * m;
            }
        },
        chunk);
    double s = 0.0;
    for (double v : partial) s += v;
    return std::sqrt(std::max(s, 0.0));
}

double rel_l2_error(const CliffordField& a, const CliffordField& b, const Grid& grid,
                    double r2max) {
    if (a.dim() != b.dim()) throw std::invalid_argument("rel_l2_error: dimension mismatch");
    const std::size_t n = grid.size();
    const std::size_t nchunks = 128;
    std::size_t chunk = (n + nchunks - 1) / nchunks;
    std::vector<double> pnum(nchunks, 0.0), pden(nchunks, 0.0);
    parallel_for(
        n,
        [&](std::size_t begin, std::size_t end) {
            std::vector<double> p(static_cast<std::size_t>(grid.dim));
            for (std::size_t i = begin; i < end; ++i) {
                grid.point(i, p);
                double xx = 0.0;
                for (double v : p) xx += v * v;
                if (xx > r2max) continue;
                Multivector bv = b(p);
                double dn = modulus(a(p) - bv);
                double dd = modulus(bv);
                pnum[i / chunk] += grid.weight(i) * dn * dn;
                pden[i / chunk] += grid.weight(i) * dd * dd;
            }
        },
        chunk);
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        num += pnum[c];
        den += pden[c];
    }
    if (den <= 0.0) return std::sqrt(std::max(num, 0.0));
    return std::sqrt(num / den);
}

}  // namespace clifft
