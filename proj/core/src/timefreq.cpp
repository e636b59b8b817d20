#include "clifft/timefreq.hpp"

#include <cmath>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_origin(const Vector1& y) {
    for (int i = 0; i < y.dim(); ++i) {
        if (y[i] != 0.0) return false;
    }
    return true;
}

}  // namespace

CliffordField translate(const CliffordField& f, const Vector1& y, const Grid& grid) {
    CliffordDim dim = f.dim();
    if (y.dim() != dim.d()) throw std::invalid_argument("translate: dimension mismatch");
    if (f.radial()) {
        CliffordField out(
            dim,
            [f, y](std::span<const double> x) {
                std::vector<double> s(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] - y[static_cast<int>(i)];
                return f(s);
            },
            is_origin(y));
        if (f.envelope()) {
            GaussEnvelope e = *f.envelope();
            for (std::size_t i = 0; i < e.center.size(); ++i) e.center[i] += y[static_cast<int>(i)];
            out.set_envelope(e);
        }
        return out;
    }
    // integral path: precompute w_i K_-(y, xi_i) F_- f(xi_i) on the grid nodes
    CliffordField Ff = cft(f, Sign::Minus, grid);
    auto samples = std::make_shared<SampledSignal>(sample_on_grid(Ff, grid));
    auto rhs = std::make_shared<std::vector<Multivector>>();
    rhs->reserve(samples->count);
    const int d = dim.d();
    for (std::size_t i = 0; i < samples->count; ++i) {
        std::span<const double> xi(&samples->pts[i * static_cast<std::size_t>(d)],
                                   static_cast<std::size_t>(d));
        Multivector v(dim);
        for (std::size_t b = 0; b < samples->blades.size(); ++b) {
            Complex c{samples->re[b][i], samples->is_real() ? 0.0 : samples->im[b][i]};
            if (c != Complex{}) v.set_coeff(samples->blades[b], c);
        }
        Multivector k = kernel_minus_closed(y.span(), xi, dim);
        rhs->push_back(geometric_product(k, v) * Complex(samples->w[i]));
    }
    double norm = std::pow(2.0 * kPi, -0.5 * d);
    return CliffordField(
        dim,
        [samples, rhs, dim, d, norm](std::span<const double> x) {
            Multivector acc(dim);
            for (std::size_t i = 0; i < samples->count; ++i) {
                std::span<const double> xi(&samples->pts[i * static_cast<std::size_t>(d)],
                                           static_cast<std::size_t>(d));
                Multivector k = kernel_minus_closed(xi, x, dim);
                acc += geometric_product(k, (*rhs)[i]);
            }
            return acc * Complex(norm);
        },
        false);
}

CliffordField modulate(const CliffordField& f, const Vector1& y) {
    CliffordDim dim = f.dim();
    if (y.dim() != dim.d()) throw std::invalid_argument("modulate: dimension mismatch");
    CliffordField out(
        dim,
        [f, y, dim](std::span<const double> x) {
            return geometric_product(kernel_minus_closed(y.span(), x, dim), f(x));
        },
        false);
    if (f.envelope()) out.set_envelope(*f.envelope());  // kernel growth is polynomial
    return out;
}

CliffordField convolve(const CliffordField& f, const CliffordField& g, const Grid& grid) {
    CliffordDim dim = f.dim();
    if (g.dim() != dim) throw std::invalid_argument("convolve: dimension mismatch");
    double norm = std::pow(2.0 * kPi, -0.5 * dim.d());
    if (f.radial()) {
        auto gs = std::make_shared<SampledSignal>(sample_on_grid(g, grid));
        const int d = dim.d();
        return CliffordField(
            dim,
            [f, gs, dim, d, norm](std::span<const double> x) {
                Multivector acc(dim);
                std::vector<double> s(static_cast<std::size_t>(d));
                for (std::size_t i = 0; i < gs->count; ++i) {
                    const double* y = &gs->pts[i * static_cast<std::size_t>(d)];
                    for (int k = 0; k < d; ++k) s[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] - y[k];
                    Complex fv = f(s).coeff(0);  // radial => scalar
                    for (std::size_t b = 0; b < gs->blades.size(); ++b) {
                        Complex gv{gs->re[b][i], gs->is_real() ? 0.0 : gs->im[b][i]};
                        acc.add_coeff(gs->blades[b], fv * gv * gs->w[i]);
                    }
                }
                return acc * Complex(norm);
            },
            f.radial() && g.radial());
    }
    // general path straight from the definition; translation fields are cached per y node
    auto gs = std::make_shared<SampledSignal>(sample_on_grid(g, grid));
    auto taus = std::make_shared<std::vector<CliffordField>>();
    const int d = dim.d();
    taus->reserve(gs->count);
    for (std::size_t i = 0; i < gs->count; ++i) {
        std::vector<double> y(&gs->pts[i * static_cast<std::size_t>(d)],
                              &gs->pts[(i + 1) * static_cast<std::size_t>(d)]);
        taus->push_back(translate(f, Vector1(y), grid));
    }
    return CliffordField(
        dim,
        [gs, taus, dim, norm](std::span<const double> x) {
            Multivector acc(dim);
            for (std::size_t i = 0; i < gs->count; ++i) {
                Multivector gv(dim);
                for (std::size_t b = 0; b < gs->blades.size(); ++b) {
                    Complex c{gs->re[b][i], gs->is_real() ? 0.0 : gs->im[b][i]};
                    if (c != Complex{}) gv.set_coeff(gs->blades[b], c);
                }
                acc += geometric_product((*taus)[i](x), gv) * Complex(gs->w[i]);
            }
            return acc * Complex(norm);
        },
        false);
}

CliffordField commutator_tm(const CliffordField& g, const Vector1& x, const Vector1& omega,
                            const Grid& grid) {
    if (!g.radial()) throw std::invalid_argument("commutator_tm: window must be radial");
    CliffordDim dim = g.dim();
    CliffordField first = translate(modulate(g, omega), x, grid);
    CliffordField second = modulate(translate(g, x, grid), omega);
    return CliffordField(
        dim, [first, second](std::span<const double> t) { return first(t) - second(t); }, false);
}

double weighted_norm(const CliffordField& f, NormKind kind, const Grid& grid) {
    if (kind.p < 1.0) throw std::invalid_argument("weighted_norm: p must be >= 1");
    double lam = f.dim().lambda();
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
                double m = modulus(f(p));
                double r = std::sqrt(inner(p, p));
                double v = 0.0;
                switch (kind.kind) {
                    case NormKind::Lp: v = std::pow(m, kind.p); break;
                    case NormKind::B: v = std::pow(1.0 + r, lam) * m; break;
                    case NormKind::Bp: v = std::pow(1.0 + r, lam) * std::pow(m, kind.p); break;
                    case NormKind::Wpl:
                        v = std::pow(1.0 + r, lam * kind.p) * std::pow(m, kind.p);
                        break;
                }
                partial[i / chunk] += grid.weight(i) * v;
            }
        },
        chunk);
    double s = 0.0;
    for (double v : partial) s += v;
    if (kind.kind == NormKind::B) return s;
    return std::pow(s, 1.0 / kind.p);
}

}  // namespace clifft
