// Test-only independent oracles. These deliberately avoid the library's own
// evaluation paths: plain ascending series with per-term gamma calls, explicit
// low-order polynomial formulas, Lanczos gamma, and a double-precision rank
// computation for the Dirac matrix.
#ifndef CLIFFT_TESTS_ORACLES_HPP
#define CLIFFT_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

namespace oracles {

// 30-term ascending series J_alpha(t) = sum_m (-1)^m (t/2)^{2m+alpha} / (m! Gamma(m+alpha+1))
inline double bessel_series30(double alpha, double t) {
    double sum = 0.0;
    for (int m = 0; m < 30; ++m) {
        double term = std::pow(-1.0, m) * std::pow(0.5 * t, 2.0 * m + alpha) /
                      (std::tgamma(m + 1.0) * std::tgamma(m + alpha + 1.0));
        sum += term;
    }
    return sum;
}

// Lanczos approximation (g = 7, n = 9), independent of std::tgamma
inline double gamma_lanczos(double x) {
    static const double g = 7.0;
    static const double c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (x < 0.5) {
        return M_PI / (std::sin(M_PI * x) * gamma_lanczos(1.0 - x));
    }
    x -= 1.0;
    double a = c[0];
    double t = x + g + 0.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// explicit Gegenbauer polynomials for k <= 3
inline double gegenbauer_explicit(int k, double lam, double u) {
    switch (k) {
        case 0: return 1.0;
        case 1: return 2.0 * lam * u;
        case 2: return 2.0 * lam * (1.0 + lam) * u * u - lam;
        case 3:
            return (4.0 / 3.0) * lam * (lam + 1.0) * (lam + 2.0) * u * u * u -
                   2.0 * lam * (lam + 1.0) * u;
        default: return std::nan("");
    }
}

inline double binom(double n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (n - i) / (k - i);
    return r;
}

// explicit Laguerre sum L_j^a(x) = sum_i (-1)^i binom(j+a, j-i) x^i / i!
inline double laguerre_explicit(int j, double a, double x) {
    double sum = 0.0;
    double fact = 1.0;
    for (int i = 0; i <= j; ++i) {
        if (i > 0) fact *= i;
        sum += std::pow(-1.0, i) * binom(j + a, j - i) * std::pow(x, i) / fact;
    }
    return sum;
}

// rank of a dense matrix by double-precision row reduction (entries are small
// integers here, so the pivot threshold is safe)
inline int matrix_rank(std::vector<std::vector<double>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        for (std::size_t i = r; i < rows; ++i) {
            if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
        }
        if (std::abs(m[piv][c]) < 1e-9) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && std::abs(m[i][c]) > 0) {
                double f = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace oracles

#endif
