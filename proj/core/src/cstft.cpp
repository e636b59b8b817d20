#include "clifft/cstft.hpp"

#include <cmath>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

double two_pi_pow(int d) { return std::pow(2.0 * kPi, -0.5 * d); }

std::vector<double> shifted(std::span<const double> t, std::span<const double> x) {
    std::vector<double> s(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) s[i] = t[i] - x[i];
    return s;
}

}  // namespace

Window::Window(CliffordField g) : g_(std::move(g)) {
    if (!g_.radial()) throw std::invalid_argument("Window: window function must be radial");
}

double Window::square_integral(const Grid& grid) const {
    if (!have_l2sq_) {
        // g^2 has twice the envelope precision; adapt the rule when known
        if (g_.envelope() && g_.envelope()->a > 0.0) {
            Grid adapted = gaussian_adapted_grid(g_.envelope()->center, 2.0 * g_.envelope()->a,
                                                 std::max(grid.nodes_per_axis, 12));
            double n = l2_norm(g_, adapted);
            l2sq_ = n * n;
        } else {
            double n = l2_norm(g_, grid);
            l2sq_ = n * n;
        }
        have_l2sq_ = true;
    }
    return l2sq_;
}

Grid vstft_grid(const CliffordField& f, const Window& g, std::span<const double> x,
                const Grid& base, int adapted_n) {
    const auto& fe = f.envelope();
    const auto& ge = g.field().envelope();
    if (!fe || !ge || fe->a <= 0.0 || ge->a <= 0.0) return base;
    double A = fe->a + ge->a;
    std::vector<double> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double gc = ge->center.empty() ? 0.0 : ge->center[i];
        c[i] = (fe->a * fe->center[i] + ge->a * (x[i] + gc)) / A;
    }
    return gaussian_adapted_grid(c, A, adapted_n);
}

Multivector vstft(const CliffordField& f, const Window& g, std::span<const double> x,
                  std::span<const double> omega, const Grid& grid) {
    CliffordDim dim = f.dim();
    if (static_cast<int>(x.size()) != dim.d() || static_cast<int>(omega.size()) != dim.d()) {
        throw std::invalid_argument("vstft: dimension mismatch");
    }
    const int d = dim.d();
    if (d > 8) throw std::invalid_argument("vstft: fast path supports d <= 8");
    // kernel product folded through moment sums as in the transform engine:
    // acc_s[b] = sum w S g f_b, acc_m[b][i] = sum w C g f_b t_i
    std::vector<Blade> blades;
    std::vector<Complex> acc_s;
    std::vector<std::array<Complex, 8>> acc_m;
    auto slot = [&](Blade b) -> std::size_t {
        for (std::size_t k = 0; k < blades.size(); ++k) {
            if (blades[k] == b) return k;
        }
        blades.push_back(b);
        acc_s.emplace_back();
        acc_m.emplace_back();
        return blades.size() - 1;
    };
    double ww = inner(omega, omega);
    const bool d4 = (d == 4);
    std::vector<double> t(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.point(i, t);
        Complex gv = g.field()(shifted(t, x)).coeff(0);  // radial window: scalar value
        if (gv == Complex{}) continue;
        Multivector ft = f(t);
        if (ft.terms().empty()) continue;
        double sdot = inner(t, omega);
        double tt = inner(t, t);
        double t2 = std::max(tt * ww - sdot * sdot, 0.0);
        double S, C;
        if (d4) {
            detail::kernel_d4_sc(sdot, t2, S, C);
        } else {
            KernelSC k = kernel_minus_closed_sc(sdot, std::sqrt(t2), dim);
            S = k.scalar;
            C = k.wedge_coeff;
        }
        Complex wS = grid.weight(i) * S * gv;
        Complex wC = grid.weight(i) * C * gv;
        for (const auto& [b, c] : ft.terms()) {
            std::size_t k = slot(b);
            acc_s[k] += wS * c;
            Complex q = wC * c;
            for (int a = 0; a < d; ++a) acc_m[k][static_cast<std::size_t>(a)] += q * t[static_cast<std::size_t>(a)];
        }
    }
    Multivector out(dim);
    const double norm = two_pi_pow(d);
    for (std::size_t k = 0; k < blades.size(); ++k) {
        if (acc_s[k] != Complex{}) out.add_coeff(blades[k], norm * acc_s[k]);
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                Complex c = omega[static_cast<std::size_t>(j)] * acc_m[k][static_cast<std::size_t>(i)] -
                            omega[static_cast<std::size_t>(i)] * acc_m[k][static_cast<std::size_t>(j)];
                if (c == Complex{}) continue;
                Blade biv = (Blade{1u} << i) | (Blade{1u} << j);
                auto [sign, blade] = blade_mul(biv, blades[k]);
                out.add_coeff(blade, norm * static_cast<double>(sign) * c);
            }
        }
    }
    return out;
}

VstftForms vstft_forms(const CliffordField& f, const Window& g, const Vector1& x,
                       const Vector1& omega, const Grid& grid) {
    CliffordDim dim = f.dim();
    const int d = dim.d();
    const double norm = two_pi_pow(d);
    VstftForms out{Multivector(dim), Multivector(dim), Multivector(dim),
                   Multivector(dim), Multivector(dim), Multivector(dim)};

    out.definition = vstft(f, g, x.span(), omega.span(), grid);

    // (imp): (2pi)^{-d/2} int conj(M_omega tau_x g(t)) f(t) dt with the radial
    // shortcut inside M_omega tau_x g(t) = K_-(omega, t) g(t - x)
    {
        Multivector acc(dim);
        std::vector<double> t(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.point(i, t);
            Complex gv = g.field()(shifted(t, x.span())).coeff(0);
            if (gv == Complex{}) continue;
            Multivector k = kernel_minus_closed(omega.span(), t, dim);
            acc += geometric_product(clifford_conjugate(k * gv), f(t)) * Complex(grid.weight(i));
        }
        out.imp = acc * Complex(norm);
    }

    CliffordField Ff = cft(f, Sign::Minus, grid);
    CliffordField Fg = cft(g.field(), Sign::Minus, grid);

    // (F2): (2pi)^{-d/2} int conj(tau_omega M_x (F_- g)(t)) (F_- f)(t) dt
    {
        CliffordField inner_field = translate(modulate(Fg, x), omega, grid);
        Multivector acc(dim);
        std::vector<double> t(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.point(i, t);
            acc += geometric_product(clifford_conjugate(inner_field.eval_memo(t)),
                                     Ff.eval_memo(t)) *
                   Complex(grid.weight(i));
        }
        out.f2 = acc * Complex(norm);
    }

    // commutator term shared by (FI) and (F5)
    Multivector comm_term(dim);
    {
        CliffordField comm = commutator_tm(g.field(), x, omega, grid);
        Multivector acc(dim);
        std::vector<double> t(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.point(i, t);
            acc += geometric_product(clifford_conjugate(comm(t)), f(t)) * Complex(grid.weight(i));
        }
        comm_term = acc * Complex(norm);
    }

    // (FI): V_{F_- g} F_- f(omega, x) - commutator term
    {
        Window wg(Fg);
        Multivector v = vstft(Ff, wg, omega.span(), x.span(), grid);
        out.fi = v - comm_term;
    }

    // (F5): F_-(F_- f . tau_omega F_- g)(x) - commutator term
    {
        CliffordField shifted_Fg = translate(Fg, omega, grid);
        CliffordField prod = field_pointwise_mul(Ff, shifted_Fg);
        CliffordField outer = cft(prod, Sign::Minus, grid);
        out.f5 = outer(x.span()) - comm_term;
    }

    // tensor: F_{2-}(T(f x g))(x, omega)
    {
        PairField T = asymmetric_coord(PairField::tensor(f, g.field()));
        PairField P = partial_cft(T, grid);
        out.tensor = P(x.span(), omega.span());
    }
    return out;
}

namespace {

// QMC loop over R^{2d} phase-space samples shared by the orthogonality,
// reconstruction and reproducing-kernel paths. body(x, omega) must be safe to
// call concurrently; partial sums reduce in fixed chunk order.
Multivector phase_space_qmc(CliffordDim dim, const QmcSampler& sampler, double sigma,
                            const std::function<Multivector(std::span<const double>,
                                                            std::span<const double>)>& body,
                            double* half_sample_error = nullptr) {
    const int d = dim.d();
    if (sampler.dim() != 2 * d) throw std::invalid_argument("phase_space_qmc: sampler dim != 2d");
    auto f2d = [&](std::span<const double> z) {
        return body(z.subspan(0, static_cast<std::size_t>(d)),
                    z.subspan(static_cast<std::size_t>(d)));
    };
    QmcResult r = qmc_integrate(dim, f2d, sampler, QmcMap::GaussianWeight, sigma);
    if (half_sample_error) *half_sample_error = r.error_estimate;
    return r.estimate;
}

}  // namespace

OrthogonalityResult orthogonality_check(const CliffordField& f1, const CliffordField& f2,
                                        const Window& g1, const Window& g2,
                                        const QmcSampler& sampler, const Grid& grid,
                                        int adapted_n, double qmc_sigma) {
    CliffordDim dim = f1.dim();
    OrthogonalityResult res{Multivector(dim), Multivector(dim), 0.0, 0.0};
    const bool same_pair = (&f1 == &f2) && (&g1 == &g2);
    auto body = [&](std::span<const double> x, std::span<const double> omega) {
        Grid ga = vstft_grid(f1, g1, x, grid, adapted_n);
        Multivector v1 = vstft(f1, g1, x, omega, ga);
        Multivector v2 = same_pair ? v1 : [&] {
            Grid gb = vstft_grid(f2, g2, x, grid, adapted_n);
            return vstft(f2, g2, x, omega, gb);
        }();
        return geometric_product(clifford_conjugate(v1), v2);
    };
    res.lhs = phase_space_qmc(dim, sampler, qmc_sigma, body, &res.qmc_error);
    Multivector inner_f = l2_inner(f1, f2, grid);
    double gg = 0.0;
    {
        CliffordField prod = field_pointwise_mul(g1.field(), g2.field());
        gg = integrate(prod, grid).coeff(0).real();
    }
    res.rhs = inner_f * Complex(gg);
    double scale = std::max(modulus(res.rhs), 1e-300);
    res.rel_dev = modulus(res.lhs - res.rhs) / scale;
    return res;
}

Multivector reconstruct(const CliffordField& f, const Window& g, std::span<const double> y,
                        const QmcSampler& sampler, const Grid& grid, int adapted_n,
                        double qmc_sigma) {
    CliffordDim dim = f.dim();
    double gg = g.square_integral(grid);
    if (gg == 0.0) throw std::invalid_argument("reconstruct: window has zero square integral");
    std::vector<double> yv(y.begin(), y.end());
    auto body = [&, yv](std::span<const double> x, std::span<const double> omega) {
        // M_omega tau_x g(y) = K_-(omega, y) g(y - x)
        Complex gv = g.field()(shifted(yv, x)).coeff(0);
        if (gv == Complex{}) return Multivector(dim);
        Multivector mod = kernel_minus_closed(omega, yv, dim) * gv;
        Grid ga = vstft_grid(f, g, x, grid, adapted_n);
        Multivector v = vstft(f, g, x, omega, ga);
        return geometric_product(mod, v);
    };
    Multivector est = phase_space_qmc(dim, sampler, qmc_sigma, body);
    return est * Complex(1.0 / gg);
}

Multivector reproducing_kernel(const Window& g, const ReproducingKernelArgs& args,
                               const Grid& grid) {
    CliffordDim dim = g.dim();
    const int d = dim.d();
    double gg = g.square_integral(grid);
    if (gg == 0.0) throw std::invalid_argument("reproducing_kernel: zero window norm");
    const double norm = 1.0 / (std::pow(2.0 * kPi, 0.5 * d) * gg);
    std::vector<double> t(static_cast<std::size_t>(d));
    if (d == 4) {
        // dense 16-component accumulation of K(t,w') conj(K(t,w)) * g g
        static const auto biv = [] {
            std::array<Blade, 6> b{};
            int p = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) b[static_cast<std::size_t>(p++)] = (Blade{1u} << i) | (Blade{1u} << j);
            return b;
        }();
        static const auto bivmul = [] {
            std::array<std::array<BladeProduct, 6>, 6> m{};
            for (int p = 0; p < 6; ++p)
                for (int q = 0; q < 6; ++q)
                    m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                        blade_mul(biv[static_cast<std::size_t>(p)], biv[static_cast<std::size_t>(q)]);
            return m;
        }();
        std::array<double, 16> acc{};
        const auto& wp = args.omega_prime;
        const auto& wm = args.omega;
        double wpwp = inner(wp, wp), wmwm = inner(wm, wm);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.point(i, t);
            double ga = g.field()(shifted(t, args.x_prime.span())).coeff(0).real();
            double gb = g.field()(shifted(t, args.x.span())).coeff(0).real();
            double c = grid.weight(i) * ga * gb;
            if (c == 0.0) continue;
            double tt = inner(t, t);
            double s1 = inner(t, wp.span());
            double s2 = inner(t, wm.span());
            double S1, C1, S2, C2;
            detail::kernel_d4_sc(s1, std::max(tt * wpwp - s1 * s1, 0.0), S1, C1);
            detail::kernel_d4_sc(s2, std::max(tt * wmwm - s2 * s2, 0.0), S2, C2);
            double w1[6], w2[6];
            int p = 0;
            for (int a = 0; a < 4; ++a) {
                for (int b = a + 1; b < 4; ++b) {
                    w1[p] = t[static_cast<std::size_t>(a)] * wp[b] - t[static_cast<std::size_t>(b)] * wp[a];
                    w2[p] = t[static_cast<std::size_t>(a)] * wm[b] - t[static_cast<std::size_t>(b)] * wm[a];
                    ++p;
                }
            }
            // K1 conj(K2) = S1 S2 - S1 C2 W2 + C1 S2 W1 - C1 C2 W1 W2
            acc[0] += c * S1 * S2;
            double a12 = -c * S1 * C2, a21 = c * C1 * S2, a22 = -c * C1 * C2;
            for (int q = 0; q < 6; ++q) {
                acc[biv[static_cast<std::size_t>(q)]] += a12 * w2[q] + a21 * w1[q];
            }
            for (int pq = 0; pq < 6; ++pq) {
                double c1 = a22 * w1[pq];
                if (c1 == 0.0) continue;
                for (int q = 0; q < 6; ++q) {
                    const BladeProduct& bp = bivmul[static_cast<std::size_t>(pq)][static_cast<std::size_t>(q)];
                    acc[bp.blade] += c1 * w2[q] * bp.sign;
                }
            }
        }
        Multivector out(dim);
        for (Blade b = 0; b < 16; ++b) {
            if (acc[b] != 0.0) out.set_coeff(b, acc[b] * norm);
        }
        return out;
    }
    Multivector acc(dim);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.point(i, t);
        Complex ga = g.field()(shifted(t, args.x_prime.span())).coeff(0);
        Complex gb = g.field()(shifted(t, args.x.span())).coeff(0);
        if (ga == Complex{} || gb == Complex{}) continue;
        Multivector k1 = kernel_minus_closed(t, args.omega_prime.span(), dim);
        Multivector k2 = kernel_minus_closed(t, args.omega.span(), dim);
        acc += geometric_product(k1 * ga, clifford_conjugate(k2 * gb)) * Complex(grid.weight(i));
    }
    return acc * Complex(norm);
}

Multivector reproduce_vstft(const CliffordField& f, const Window& g,
                            std::span<const double> x_prime, std::span<const double> omega_prime,
                            const QmcSampler& sampler, const Grid& grid, int adapted_n,
                            double qmc_sigma) {
    CliffordDim dim = f.dim();
    std::vector<double> xp(x_prime.begin(), x_prime.end());
    std::vector<double> wp(omega_prime.begin(), omega_prime.end());
    const auto& ge = g.field().envelope();
    g.square_integral(grid);  // warm the cache before the parallel loop
    auto body = [&, xp, wp](std::span<const double> x, std::span<const double> omega) {
        ReproducingKernelArgs args{Vector1(std::vector<double>(omega.begin(), omega.end())),
                                   Vector1(std::vector<double>(x.begin(), x.end())),
                                   Vector1(wp), Vector1(xp)};
        // the kernel integrand g(t-x') g(t-x) concentrates between the two centers
        Grid kernel_grid = grid;
        if (ge && ge->a > 0.0) {
            std::vector<double> c(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) c[i] = 0.5 * (x[i] + xp[i]);
            kernel_grid = gaussian_adapted_grid(c, 2.0 * ge->a, adapted_n);
        }
        Multivector kg = reproducing_kernel(g, args, kernel_grid);
        Grid ga = vstft_grid(f, g, x, grid, adapted_n);
        Multivector v = vstft(f, g, x, omega, ga);
        return geometric_product(kg, v);
    };
    return phase_space_qmc(dim, sampler, qmc_sigma, body);
}

}  // namespace clifft
