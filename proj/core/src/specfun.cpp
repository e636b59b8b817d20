#include "clifft/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace clifft {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_half_integer(double alpha) {
    double two = 2.0 * alpha;
    return two == std::floor(two) && std::floor(alpha) != alpha;
}

bool is_nonneg_integer(double alpha) {
    return alpha >= 0.0 && alpha == std::floor(alpha);
}

// Ascending series J_alpha(t) = (t/2)^alpha sum_m (-t^2/4)^m / (m! Gamma(m+alpha+1)).
double bessel_series(double alpha, double t) {
    double q = -0.25 * t * t;
    double term = 1.0 / std::tgamma(alpha + 1.0);
    double sum = term;
    for (int m = 1; m <= 220; ++m) {
        term *= q / (m * (m + alpha));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return std::pow(0.5 * t, alpha) * sum;
}

// Half-integer orders from sin/cos seeds by upward recurrence.
double bessel_half_integer(double alpha, double t) {
    if (t == 0.0) {
        if (alpha > 0.0) return 0.0;
        throw std::domain_error("bessel_j: J_{-1/2} diverges at t = 0");
    }
    double pref = std::sqrt(2.0 / (kPi * t));
    double jm = pref * std::cos(t);  // J_{-1/2}
    double j0 = pref * std::sin(t);  // J_{+1/2}
    if (alpha == -0.5) return jm;
    double nu = 0.5;
    while (nu < alpha) {
        double jn = (2.0 * nu / t) * j0 - jm;
        jm = j0;
        j0 = jn;
        nu += 1.0;
    }
    return j0;
}

// Hankel large-argument expansion, adequate for the moderate orders used here.
double bessel_asymptotic(double alpha, double t) {
    double mu = 4.0 * alpha * alpha;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double e = 8.0 * t;
    // P: even k, Q: odd k of the standard expansion
    double num = mu - 1.0;
    term = num / e;
    q = term;
    term *= (mu - 9.0) / (2.0 * e);
    p -= term;
    term *= (mu - 25.0) / (3.0 * e);
    q -= term;
    term *= (mu - 49.0) / (4.0 * e);
    p += term;
    double w = t - 0.5 * alpha * kPi - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * t)) * (std::cos(w) * p - std::sin(w) * q);
}

}  // namespace

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::domain_error("gamma_fn: pole at non-positive integer argument");
    }
    return std::tgamma(x);
}

double bessel_j(double alpha, double t) {
    if (alpha < -0.5) throw std::domain_error("bessel_j: order must be >= -1/2");
    if (t < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
    if (is_half_integer(alpha)) return bessel_half_integer(alpha, t);
    if (t <= 12.0) return bessel_series(alpha, t);
    if (is_nonneg_integer(alpha)) {
        int n = static_cast<int>(alpha);
        return bessel_j_family(n, 1, t)[0];
    }
    return bessel_asymptotic(alpha, t);
}

double tilde_j(double alpha, double t) { return tilde_j(alpha, t, SpecFunConfig{}); }

double tilde_j(double alpha, double t, const SpecFunConfig& cfg) {
    if (t < 0.0) throw std::domain_error("tilde_j: argument must be >= 0");
    if (t < cfg.series_switch_t0) {
        // tilde-J_alpha(t) = 2^{-alpha} sum_m (-t^2/4)^m / (m! Gamma(m+alpha+1))
        double q = -0.25 * t * t;
        double term = 1.0 / std::tgamma(alpha + 1.0);
        double sum = term;
        for (int m = 1; m <= cfg.series_terms; ++m) {
            term *= q / (m * (m + alpha));
            sum += term;
            if (std::abs(term) < cfg.tol * std::abs(sum) + 1e-300) break;
        }
        return std::pow(2.0, -alpha) * sum;
    }
    return bessel_j(alpha, t) * std::pow(t, -alpha);
}

std::vector<double> bessel_j_family(int alpha0, int count, double t) {
    if (alpha0 < 0 || count < 1) throw std::domain_error("bessel_j_family: bad order range");
    std::vector<double> out(static_cast<std::size_t>(count), 0.0);
    int nmax = alpha0 + count - 1;
    if (t == 0.0) {
        if (alpha0 == 0) out[0] = 1.0;
        return out;
    }
    if (t <= 2.0 && nmax <= 30) {
        for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = bessel_series(alpha0 + k, t);
        return out;
    }
    // Miller backward recurrence with the J_0 + 2 sum J_{2k} = 1 normalization
    int start = std::max(nmax, static_cast<int>(t)) + 16 +
                2 * static_cast<int>(std::sqrt(static_cast<double>(nmax) + t));
    double jp = 0.0, j = 1e-30;
    double norm = 0.0;
    for (int n = start; n >= 0; --n) {
        double jm = (2.0 * (n + 1) / t) * j - jp;
        jp = j;
        j = jm;
        if (n % 2 == 0) norm += (n == 0 ? 1.0 : 2.0) * j;
        if (n >= alpha0 && n <= nmax) out[static_cast<std::size_t>(n - alpha0)] = j;
        if (std::abs(j) > 1e250) {  // rescale to avoid overflow
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    for (auto& v : out) v /= norm;
    return out;
}

double gegenbauer(int k, double lambda, double u) {
    if (k < 0) return 0.0;  // C_{-1} convention
    if (k == 0) return 1.0;
    double cm2 = 1.0;
    double cm1 = 2.0 * lambda * u;
    if (k == 1) return cm1;
    double c = 0.0;
    for (int n = 2; n <= k; ++n) {
        c = (2.0 * u * (n + lambda - 1.0) * cm1 - (n + 2.0 * lambda - 2.0) * cm2) / n;
        cm2 = cm1;
        cm1 = c;
    }
    return c;
}

double laguerre(int j, double alpha, double r) {
    if (j < 0) throw std::domain_error("laguerre: degree must be >= 0");
    if (j == 0) return 1.0;
    double lm2 = 1.0;
    double lm1 = 1.0 + alpha - r;
    if (j == 1) return lm1;
    double l = 0.0;
    for (int n = 2; n <= j; ++n) {
        l = ((2.0 * n - 1.0 + alpha - r) * lm1 - (n - 1.0 + alpha) * lm2) / n;
        lm2 = lm1;
        lm1 = l;
    }
    return l;
}

}  // namespace clifft
