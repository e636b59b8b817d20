#include <doctest.h>

#include <cmath>

#include "clifft/quadrature.hpp"

using namespace clifft;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;
}

TEST_CASE("hermite rule integrates gaussian moments exactly") {
    Grid g = build_grid(1, GridScheme::HermiteWeighted, 3);
    // int x^{0,2,4} e^{-x^2} dx = sqrt(pi), sqrt(pi)/2, 3 sqrt(pi)/4
    double m0 = 0.0, m2 = 0.0, m4 = 0.0;
    std::vector<double> p(1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.point(i, p);
        double w = g.weight(i) * std::exp(-p[0] * p[0]);
        m0 += w;
        m2 += w * p[0] * p[0];
        m4 += w * p[0] * p[0] * p[0] * p[0];
    }
    CHECK(m0 == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-12));
    CHECK(m4 == doctest::Approx(0.75 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("tensor grid size and guards") {
    Grid g = build_grid(2, GridScheme::HermiteWeighted, 2);
    CHECK(g.size() == 4);
    CHECK_THROWS_AS(build_grid(4, GridScheme::HermiteWeighted, 100), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1, GridScheme::TrapezoidBox, 10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1, GridScheme::HermiteWeighted, 1), std::invalid_argument);
}

TEST_CASE("trapezoid box integrates the gaussian over d = 4") {
    Grid g = build_grid(4, GridScheme::TrapezoidBox, 25, 6.0);
    CliffordDim dim(4);
    CliffordField f(dim, [dim](std::span<const double> x) {
        return Multivector::scalar(dim, std::exp(-inner(x, x)));
    });
    Multivector v = integrate(f, g);
    CHECK(v.coeff(0).real() == doctest::Approx(kPi * kPi).epsilon(1e-8));
}

TEST_CASE("integrate basics") {
    {
        // constant 1 over [-1, 1] in one dimension
        Grid g1 = build_grid(1, GridScheme::TrapezoidBox, 101, 1.0);
        double sum = 0.0;
        for (std::size_t i = 0; i < g1.size(); ++i) sum += g1.weight(i);
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-10));
        // dimension mismatch guard
        CliffordField f2(CliffordDim(2), [](std::span<const double>) {
            return Multivector::scalar(CliffordDim(2), 1.0);
        });
        CHECK_THROWS_AS(integrate(f2, g1), std::invalid_argument);
    }
    {
        // gaussian with scale sqrt(2), d = 4: int e^{-|x|^2/2} = (2 pi)^2
        Grid g = build_grid(4, GridScheme::HermiteWeighted, 20, 0.0, kSqrt2);
        CliffordDim dim(4);
        CliffordField f = CliffordField::gaussian(dim, 1.0);
        CHECK(integrate(f, g).coeff(0).real() ==
              doctest::Approx(std::pow(2.0 * kPi, 2)).epsilon(1e-10));
        // odd integrand vanishes by symmetry
        CliffordField odd(dim, [dim](std::span<const double> x) {
            return Multivector::scalar(dim, x[0] * std::exp(-inner(x, x)));
        });
        CHECK(std::abs(integrate(odd, g).coeff(0).real()) < 1e-12);
    }
}

TEST_CASE("refinement convergence on a gaussian-class integrand") {
    // trapezoid error drops fast with node count until the floor
    CliffordDim dim(2);
    CliffordField f(dim, [dim](std::span<const double> x) {
        return Multivector::scalar(dim, std::exp(-inner(x, x)));
    });
    double prev_err = -1.0;
    for (int n : {11, 21, 41}) {
        Grid g = build_grid(2, GridScheme::TrapezoidBox, n, 6.0);
        double err = std::abs(integrate(f, g).coeff(0).real() - kPi);
        if (prev_err > 1e-10) CHECK(err < 0.1 * prev_err);
        prev_err = err;
    }
}

TEST_CASE("integration is linear in clifford constants") {
    CliffordDim dim(2);
    Grid g = build_grid(2, GridScheme::HermiteWeighted, 10, 0.0, kSqrt2);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    CliffordField h(dim, [dim](std::span<const double> x) {
        Multivector m(dim);
        m.set_coeff(0b01, std::exp(-0.7 * inner(x, x)));
        return m;
    });
    Multivector alpha = Multivector::basis(dim, 0b11, 0.5);
    Multivector beta = Multivector::scalar(dim, Complex{0.0, 2.0});
    CliffordField combo = field_add(field_right_mul(f, alpha), field_right_mul(h, beta));
    Multivector lhs = integrate(combo, g);
    Multivector rhs = geometric_product(integrate(f, g), alpha) +
                      geometric_product(integrate(h, g), beta);
    CHECK(modulus(lhs - rhs) < 1e-12 * (1.0 + modulus(rhs)));
}

TEST_CASE("integrate surfaces evaluation failures with the node location") {
    CliffordDim dim(2);
    Grid g = build_grid(2, GridScheme::TrapezoidBox, 5, 1.0);
    CliffordField bad(dim, [dim](std::span<const double> x) -> Multivector {
        if (x[0] > 0.4) throw std::runtime_error("synthetic failure");
        return Multivector(dim);
    });
    CHECK_THROWS_WITH_AS(integrate(bad, g), doctest::Contains("node"), std::runtime_error);
}

TEST_CASE("qmc sampler determinism and validation") {
    CHECK_THROWS_AS(QmcSampler(8, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(QmcSampler(40, 2000, 1), std::invalid_argument);
    QmcSampler a(8, 2000, 99), b(8, 2000, 99), c(8, 2000, 100);
    std::vector<double> ua(8), ub(8), uc(8);
    bool same = true, differs = false;
    for (std::int64_t i = 0; i < 2000; ++i) {
        a.point01(i, ua);
        b.point01(i, ub);
        c.point01(i, uc);
        same = same && (ua == ub);
        differs = differs || (ua != uc);
        for (double v : ua) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
    }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("qmc gaussian-map integration") {
    CliffordDim dim(4);
    // product gaussian over R^8: int e^{-|z|^2/2} dz = (2 pi)^4
    QmcSampler s(8, 100000, 1234);
    auto f = [dim](std::span<const double> z) {
        return Multivector::scalar(dim, std::exp(-0.5 * inner(z, z)));
    };
    QmcResult r = qmc_integrate(dim, f, s, QmcMap::GaussianWeight, kSqrt2);
    double expected = std::pow(2.0 * kPi, 4);
    CHECK(std::abs(r.estimate.coeff(0).real() - expected) / expected < 0.02);
    // zero integrand
    auto zf = [dim](std::span<const double>) { return Multivector(dim); };
    QmcSampler s2(8, 1000, 5);
    CHECK(modulus(qmc_integrate(dim, zf, s2, QmcMap::GaussianWeight, 1.0).estimate) == 0.0);
    // bit-identical rerun
    QmcSampler s3(8, 20000, 1234);
    QmcResult r1 = qmc_integrate(dim, f, s3, QmcMap::GaussianWeight, kSqrt2);
    QmcResult r2 = qmc_integrate(dim, f, s3, QmcMap::GaussianWeight, kSqrt2);
    CHECK(r1.estimate.coeff(0).real() == r2.estimate.coeff(0).real());
    CHECK(r1.error_estimate == r2.error_estimate);
}

TEST_CASE("adapted grid recenters the rule") {
    std::vector<double> center{1.0, -2.0};
    Grid g = gaussian_adapted_grid(center, 2.0, 10);
    CliffordDim dim(2);
    // int e^{-2 |x - c|^2} dx = (pi/2)^{d/2}
    CliffordField f(dim, [dim, center](std::span<const double> x) {
        double q = 0.0;
        for (std::size_t i = 0; i < 2; ++i) q += (x[i] - center[i]) * (x[i] - center[i]);
        return Multivector::scalar(dim, std::exp(-2.0 * q));
    });
    CHECK(integrate(f, g).coeff(0).real() == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}
