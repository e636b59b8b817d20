#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "clifft/kernel.hpp"

using namespace clifft;

namespace {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    double uniform() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double sym(double a) { return a * (2.0 * uniform() - 1.0); }
};

Vector1 rvec(Rng& rng, int d, double rmax) {
    std::vector<double> v(static_cast<std::size_t>(d));
    double n2 = 0;
    for (auto& c : v) {
        c = rng.sym(1.0);
        n2 += c * c;
    }
    double scale = rmax * rng.uniform() / std::sqrt(n2);
    for (auto& c : v) c *= scale;
    return Vector1(std::move(v));
}

}  // namespace

TEST_CASE("kernel args") {
    CliffordDim dim(4);
    Vector1 x{1.0, 2.0, 0.0, -1.0}, y{0.5, 0.0, 1.0, 1.0};
    KernelArgs a = KernelArgs::from(x.span(), y.span(), dim);
    CHECK(a.s == doctest::Approx(inner(x, y)));
    double nx = x.norm(), ny = y.norm();
    CHECK(a.t * a.t + a.s * a.s == doctest::Approx(nx * nx * ny * ny).epsilon(1e-10));
    CHECK(a.xi.has_value());
    CHECK(std::abs(inner(*a.xi, *a.eta)) <= 1.0 + 1e-12);
    KernelArgs z = KernelArgs::from(std::vector<double>(4, 0.0), y.span(), dim);
    CHECK_FALSE(z.xi.has_value());
}

TEST_CASE("kernel special values at d = 4") {
    CliffordDim dim(4);
    Vector1 e1{1.0, 0.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0, 0.0};
    Vector1 zero{0.0, 0.0, 0.0, 0.0};
    Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        Vector1 y = rvec(rng, 4, 3.0);
        Multivector k = kernel_minus_closed(zero, y, dim);
        CHECK(modulus(k - Multivector::scalar(dim, 1.0)) < 1e-14);
    }
    // s = 0, t = 1: scalar sin(1), no bivector part
    Multivector k12 = kernel_minus_closed(e1, e2, dim);
    CHECK(k12.coeff(0).real() == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(modulus(k12.grade_part(2)) < 1e-15);
}

TEST_CASE("closed form equals series form") {
    for (int d : {4, 6}) {
        CliffordDim dim(d);
        Rng rng(42 + static_cast<std::uint64_t>(d));
        double maxdev = 0.0;
        for (int i = 0; i < 500; ++i) {
            Vector1 x = rvec(rng, d, 3.0);
            Vector1 y = rvec(rng, d, 3.0);
            Multivector kc = kernel_minus_closed(x, y, dim);
            Multivector ks = kernel_minus_series(x.span(), y.span(), dim, 1e-12);
            maxdev = std::max(maxdev, modulus(kc - ks));
        }
        CHECK(maxdev < 1e-8);
    }
    // d = 6 spot check from fixed vectors
    {
        CliffordDim dim(6);
        Vector1 x{1.0, 0.0, 1.0, 0.0, 0.0, 0.0};
        Vector1 y{0.0, 2.0, 0.0, 0.0, 0.0, 0.0};
        Multivector kc = kernel_minus_closed(x, y, dim);
        Multivector ks = kernel_minus_series(x.span(), y.span(), dim, 1e-12);
        CHECK(modulus(kc - ks) < 1e-8);
    }
    // series limit at x = 0 is exactly 1
    {
        CliffordDim dim(4);
        std::vector<double> zero(4, 0.0), y{0.4, -0.2, 1.0, 0.0};
        Multivector ks = kernel_minus_series(zero, y, dim, 1e-12);
        CHECK(modulus(ks - Multivector::scalar(dim, 1.0)) == 0.0);
    }
}

TEST_CASE("series diagnostics and d = 2 rejection") {
    CliffordDim dim(4);
    std::vector<double> x{30.0, 0.0, 0.0, 0.0}, y{0.0, 30.0, 0.0, 0.0};
    KernelSeriesSC k = kernel_minus_series_sc(x, y, dim, 1e-12, 60);
    CHECK_FALSE(k.converged);
    CHECK(k.tail_estimate > 0.0);
    CHECK_THROWS_AS(kernel_minus_series(x, y, dim, 1e-12), std::runtime_error);
    std::vector<double> x2{1.0, 0.0}, y2{0.0, 1.0};
    CHECK_THROWS_AS(kernel_minus_series(x2, y2, CliffordDim(2), 1e-12), std::domain_error);
}

TEST_CASE("kernel symmetries") {
    CliffordDim dim(4);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        Vector1 x = rvec(rng, 4, 3.0);
        Vector1 y = rvec(rng, 4, 3.0);
        Multivector kxy = kernel_minus_closed(x, y, dim);
        CHECK(modulus(kernel_minus_closed(y, x, dim) - clifford_conjugate(kxy)) < 1e-12);
        CHECK(modulus(kernel_minus_closed(-x, y, dim) - kernel_minus_closed(x, -y, dim)) < 1e-12);
        // grades 0 and 2 only
        CHECK(modulus(kxy - kxy.grade_part(0) - kxy.grade_part(2)) == 0.0);
    }
}

TEST_CASE("d = 2 kernel satisfies the exponential law") {
    CliffordDim dim(2);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Vector1 x = rvec(rng, 2, 2.0);
        Vector1 y = rvec(rng, 2, 2.0);
        Vector1 z = rvec(rng, 2, 2.0);
        Multivector lhs =
            geometric_product(kernel_minus_closed(x, z, dim), kernel_minus_closed(y, z, dim));
        Multivector rhs = kernel_minus_closed(x + y, z, dim);
        CHECK(modulus(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("d = 4 has no exponential law") {
    CliffordDim dim(4);
    Vector1 x{1.0, 1.0, 0.0, 0.0}, y{0.0, 0.0, 1.0, 1.0}, z{1.0, 0.0, 1.0, 0.0};
    double dev = modulus(geometric_product(kernel_minus_closed(x, z, dim),
                                           kernel_minus_closed(y, z, dim)) -
                         kernel_minus_closed(x + y, z, dim));
    CHECK(dev > 0.1);
}

TEST_CASE("kernel plus and tilde") {
    CliffordDim dim(4);
    Rng rng(13);
    Vector1 zero{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 50; ++i) {
        Vector1 x = rvec(rng, 4, 3.0);
        Vector1 y = rvec(rng, 4, 3.0);
        // K_+(x, y) = K_-(x, -y), real case
        CHECK(modulus(kernel_plus(x.span(), y.span(), dim) -
                      kernel_minus_closed(x, -y, dim)) == 0.0);
        // tilde kernel equals the kernel for even d
        CHECK(modulus(kernel_tilde(x.span(), y.span(), dim, Sign::Minus) -
                      kernel_minus_closed(x, y, dim)) == 0.0);
        CHECK(kernel_minus_closed(x, y, dim).max_abs_imag() < 1e-14);
    }
    Vector1 y{0.2, -0.4, 1.0, 0.3};
    CHECK(modulus(kernel_plus(zero.span(), y.span(), dim) - Multivector::scalar(dim, 1.0)) <
          1e-14);
    CHECK(modulus(kernel_tilde(zero.span(), y.span(), dim, Sign::Minus) -
                  Multivector::scalar(dim, 1.0)) < 1e-14);
    Vector1 e1{1.0, 0.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0, 0.0};
    CHECK(kernel_plus(e1.span(), e2.span(), dim).coeff(0).real() ==
          doctest::Approx(std::sin(1.0)));
}

TEST_CASE("bound ratio is finite and stable") {
    CliffordDim dim(4);
    Vector1 zero{0.0, 0.0, 0.0, 0.0};
    CHECK(bound_ratio(zero.span(), zero.span(), dim) == doctest::Approx(1.0));
    Rng rng(17);
    double train = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Vector1 x = rvec(rng, 4, 5.0);
        Vector1 y = rvec(rng, 4, 5.0);
        train = std::max(train, bound_ratio(x.span(), y.span(), dim));
    }
    double test = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Vector1 x = rvec(rng, 4, 5.0);
        Vector1 y = rvec(rng, 4, 5.0);
        test = std::max(test, bound_ratio(x.span(), y.span(), dim));
    }
    CHECK(test <= 1.5 * train);
    // bounded trend along an orthogonal ray
    double prev_ratio = 0.0;
    for (double r = 1.0; r <= 10.0; r += 1.0) {
        Vector1 x{r, 0.0, 0.0, 0.0}, y{0.0, r, 0.0, 0.0};
        double q = bound_ratio(x.span(), y.span(), dim);
        CHECK(std::isfinite(q));
        CHECK(q < 10.0 * std::max(train, 1.0));
        prev_ratio = q;
    }
    (void)prev_ratio;
}

TEST_CASE("d4 fast path matches the generic closed form") {
    CliffordDim dim(4);
    Rng rng(19);
    // compare against the generic lambda-sum path (the d-of-6 code path with
    // lambda = 1 coefficients computed explicitly through tilde_j)
    for (int i = 0; i < 300; ++i) {
        double s = rng.sym(8.0);
        double t = 8.0 * rng.uniform();
        double S, C;
        detail::kernel_d4_sc(s, t * t, S, C);
        double v0 = std::sqrt(M_PI / 2.0) * tilde_j(0.5, t);
        double v1 = std::sqrt(M_PI / 2.0) * tilde_j(1.5, t);
        CHECK(S == doctest::Approx((1.0 - s) * v0).epsilon(1e-12));
        CHECK(C == doctest::Approx(-s * v1).epsilon(1e-12));
    }
}
