#include "clifft/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

KernelArgs KernelArgs::from(std::span<const double> x, std::span<const double> y,
                            CliffordDim dim) {
    if (static_cast<int>(x.size()) != dim.d() || static_cast<int>(y.size()) != dim.d()) {
        throw std::invalid_argument("KernelArgs: vector dimension mismatch");
    }
    KernelArgs a{.s = 0.0, .t = 0.0, .xi = {}, .eta = {}, .wedge_xy = wedge(x, y, dim)};
    a.s = inner(x, y);
    double nx2 = inner(x, x), ny2 = inner(y, y);
    a.t = std::sqrt(std::max(nx2 * ny2 - a.s * a.s, 0.0));
    if (nx2 > 0.0) {
        std::vector<double> u(x.begin(), x.end());
        double n = std::sqrt(nx2);
        for (auto& v : u) v /= n;
        a.xi = Vector1(std::move(u));
    }
    if (ny2 > 0.0) {
        std::vector<double> u(y.begin(), y.end());
        double n = std::sqrt(ny2);
        for (auto& v : u) v /= n;
        a.eta = Vector1(std::move(u));
    }
    return a;
}

KernelSC kernel_minus_closed_sc(double s, double t, CliffordDim dim) {
    if (dim.d() == 4) {
        KernelSC k;
        detail::kernel_d4_sc(s, t * t, k.scalar, k.wedge_coeff);
        return k;
    }
    int lam = dim.lambda_int();
    // loop bounds floor((lam+1)/2 - 3/4) and floor(lam/2); negative upper bound
    // yields an empty sum (the lam = 0 case)
    int la = (lam % 2 == 0) ? lam / 2 - 1 : (lam - 1) / 2;
    int lb = lam / 2;
    double A = 0.0, B = 0.0, C = 0.0;
    for (int l = 0; l <= la; ++l) {
        double coef = ipow(s, lam - 1 - 2 * l) / (ipow(2.0, l) * factorial(l)) *
                      gamma_fn(lam + 1.0) / gamma_fn(lam - 2.0 * l);
        A += coef * tilde_j(0.5 * (2 * lam - 2 * l - 1), t);
    }
    for (int l = 0; l <= lb; ++l) {
        double coef = ipow(s, lam - 2 * l) / (ipow(2.0, l) * factorial(l)) *
                      gamma_fn(lam + 1.0) / gamma_fn(lam - 2.0 * l + 1.0);
        B -= coef * tilde_j(0.5 * (2 * lam - 2 * l - 1), t);
        C -= coef * tilde_j(0.5 * (2 * lam - 2 * l + 1), t);
    }
    double pref = ((lam + 1) % 2 == 0 ? 1.0 : -1.0) * std::sqrt(kPi / 2.0);
    return {pref * (A + B), pref * C};
}

Multivector kernel_minus_closed(std::span<const double> x, std::span<const double> y,
                                CliffordDim dim) {
    KernelArgs a = KernelArgs::from(x, y, dim);
    KernelSC k = kernel_minus_closed_sc(a.s, a.t, dim);
    Multivector r = Multivector::scalar(dim, k.scalar);
    r += a.wedge_xy * Complex(k.wedge_coeff);
    return r;
}

KernelSeriesSC kernel_minus_series_sc(std::span<const double> x, std::span<const double> y,
                                      CliffordDim dim, double tol, int max_terms) {
    if (dim.d() < 4) {
        throw std::domain_error(
            "kernel_minus_series: series coefficients have a Gamma(lambda) pole at d = 2; "
            "use the closed form");
    }
    int lam = dim.lambda_int();
    double nx = std::sqrt(inner(x, x)), ny = std::sqrt(inner(y, y));
    double r = nx * ny;
    KernelSeriesSC out;
    if (r < 1e-300) {  // only the k = 0 terms survive; they sum to 1
        out.scalar = 1.0;
        out.terms_used = 1;
        return out;
    }
    double u = inner(x, y) / r;
    u = std::min(1.0, std::max(-1.0, u));
    double i_d = (dim.d() % 4 == 0) ? 1.0 : -1.0;  // i^d for even d
    double t = std::sqrt(std::max(inner(x, x) * inner(y, y) - inner(x, y) * inner(x, y), 0.0));

    // c_k = r^{-lam} J_{k+lam}(r); family by backward recurrence for r past the
    // tilde-J series switch, term-by-term tilde-J series below it
    std::vector<double> fam;
    double rlam = ipow(r, lam);
    bool use_family = r >= 1.0;
    if (use_family) fam = bessel_j_family(lam, max_terms + 1, r);

    double gl1 = gamma_fn(lam + 1.0);  // Gamma(lambda+1)
    double gl = gamma_fn(static_cast<double>(lam));
    double cA = std::pow(2.0, lam - 1) * gl1;
    double cB = -std::pow(2.0, lam - 1) * gl;
    double cC = -2.0 * lam * std::pow(2.0, lam - 1) * gl;

    // incremental Gegenbauer recurrences for C_k^lam(u) and C_{k-1}^{lam+1}(u)
    double g1m2 = 0.0, g1m1 = 0.0;  // C^{lam}_{k-2}, C^{lam}_{k-1}
    double g2m2 = 0.0, g2m1 = 0.0;  // C^{lam+1}_{k-3}, C^{lam+1}_{k-2}
    Complex A = 0.0, B = 0.0, C = 0.0;
    int consecutive_small = 0;
    double last_contrib = 0.0;
    for (int k = 0; k <= max_terms; ++k) {
        double g1 = (k == 0) ? 1.0 : (k == 1) ? 2.0 * lam * u
                   : (2.0 * u * (k + lam - 1.0) * g1m1 - (k + 2.0 * lam - 2.0) * g1m2) / k;
        int k2 = k - 1;  // degree of the C^{lam+1} factor
        double g2 = (k2 < 0) ? 0.0 : (k2 == 0) ? 1.0 : (k2 == 1) ? 2.0 * (lam + 1.0) * u
                   : (2.0 * u * (k2 + lam) * g2m1 - (k2 + 2.0 * lam) * g2m2) / k2;
        double ck = use_family ? fam[static_cast<std::size_t>(k)] / rlam
                               : ipow(r, k) * tilde_j(k + lam, r);
        double sig = (k % 2 == 0) ? 1.0 : -1.0;
        Complex dA = cA * (i_d + sig) * ck * g1;
        Complex dB = cB * (k + lam) * (i_d - sig) * ck * g1;
        Complex dC = (k >= 1) ? Complex(cC * (i_d + sig) * (ck / r) * g2) : Complex(0.0);
        A += dA;
        B += dB;
        C += dC;
        out.terms_used = k + 1;
        double contrib = std::abs(dA + dB) + std::abs(dC) * t;
        last_contrib = contrib;
        double mag = std::abs(A + B) + std::abs(C) * t;
        if (contrib < tol * std::max(mag, 1e-30)) {
            if (++consecutive_small >= 3) break;
        } else {
            consecutive_small = 0;
        }
        g1m2 = g1m1; g1m1 = g1;
        if (k2 >= 0) { g2m2 = g2m1; g2m1 = g2; }
    }
    out.scalar = A + B;
    out.wedge_coeff = C;
    out.tail_estimate = 3.0 * last_contrib;
    double mag = std::abs(out.scalar) + std::abs(out.wedge_coeff) * t;
    out.converged = consecutive_small >= 3 || out.tail_estimate <= tol * std::max(mag, 1e-30);
    return out;
}

Multivector kernel_minus_series(std::span<const double> x, std::span<const double> y,
                                CliffordDim dim, double tol) {
    KernelSeriesSC k = kernel_minus_series_sc(x, y, dim, tol);
    if (!k.converged) {
        throw std::runtime_error("kernel_minus_series: truncation tail " +
                                 std::to_string(k.tail_estimate) +
                                 " exceeds tolerance at max terms");
    }
    Multivector r = Multivector::scalar(dim, k.scalar);
    r += wedge(x, y, dim) * k.wedge_coeff;
    return r;
}

Multivector kernel_plus(std::span<const double> x, std::span<const double> y, CliffordDim dim) {
    std::vector<double> my(y.begin(), y.end());
    for (auto& v : my) v = -v;
    Multivector km = kernel_minus_closed(x, my, dim);
    Multivector r(dim);
    for (const auto& [b, c] : km.terms()) r.set_coeff(b, std::conj(c));
    return r;
}

Multivector kernel_tilde(std::span<const double> x, std::span<const double> y, CliffordDim dim,
                         Sign sign) {
    Multivector k = (sign == Sign::Minus) ? kernel_minus_closed(x, y, dim)
                                          : kernel_plus(x, y, dim);
    Multivector r(dim);
    for (const auto& [b, c] : k.terms()) r.set_coeff(b, std::conj(c));
    return r;
}

double bound_ratio(std::span<const double> x, std::span<const double> y, CliffordDim dim) {
    double lam = dim.lambda();
    double nx = std::sqrt(inner(x, x)), ny = std::sqrt(inner(y, y));
    double denom = std::pow(1.0 + nx, lam) * std::pow(1.0 + ny, lam);
    return modulus(kernel_minus_closed(x, y, dim)) / denom;
}

}  // namespace clifft
