#include <doctest.h>

#include <cmath>

#include "clifft/specfun.hpp"
#include "oracles.hpp"

using namespace clifft;

TEST_CASE("bessel_j basics") {
    CHECK(bessel_j(0.0, 0.0) == doctest::Approx(1.0));
    // half-integer identity: J_{1/2}(pi) = sqrt(2/pi^2) sin(pi) = 0
    CHECK(std::abs(bessel_j(0.5, M_PI)) < 1e-14);
    CHECK(bessel_j(1.0, 1.0) == doctest::Approx(oracles::bessel_series30(1.0, 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), std::domain_error);
}

TEST_CASE("bessel_j against the series oracle across orders and arguments") {
    for (double alpha : {-0.5, 0.5, 1.0, 1.5, 2.0, 3.0, 3.5, 5.0}) {
        for (double t : {0.1, 0.7, 1.0, 2.5, 6.0, 11.0}) {
            double ref = oracles::bessel_series30(alpha, t);
            CHECK(bessel_j(alpha, t) == doctest::Approx(ref).epsilon(1e-11));
        }
    }
}

TEST_CASE("bessel family consistency at large arguments") {
    // Miller recurrence vs the half-integer closed forms via the recurrence
    // J_{n+1} = (2n/t) J_n - J_{n-1} checked directly
    for (double t : {15.0, 40.0, 300.0, 1000.0}) {
        auto fam = bessel_j_family(0, 12, t);
        for (int n = 1; n + 1 < 12; ++n) {
            double res = fam[static_cast<std::size_t>(n + 1)] -
                         (2.0 * n / t) * fam[static_cast<std::size_t>(n)] +
                         fam[static_cast<std::size_t>(n - 1)];
            CHECK(std::abs(res) < 1e-12);
        }
        CHECK(std::isfinite(bessel_j(2.0, t)));
        CHECK(std::isfinite(bessel_j(2.5, t)));
    }
}

TEST_CASE("tilde_j value at zero and at the seam") {
    SpecFunConfig cfg;
    for (double alpha : {-0.5, 0.5, 1.0, 2.0, 3.5}) {
        double expected = 1.0 / (std::pow(2.0, alpha) * oracles::gamma_lanczos(alpha + 1.0));
        CHECK(tilde_j(alpha, 0.0) == doctest::Approx(expected).epsilon(1e-12));
        double seam = std::abs(tilde_j(alpha, cfg.series_switch_t0 - 1e-13) -
                               tilde_j(alpha, cfg.series_switch_t0 + 1e-13));
        CHECK(seam < 1e-12);
    }
    // sqrt(2/pi) sin(t)/t at t = pi vanishes
    CHECK(std::abs(tilde_j(0.5, M_PI)) < 1e-14);
    // consistency t^alpha tilde_j = J on [t0, 50]
    for (double t = 1.0; t <= 50.0; t += 4.7) {
        for (double alpha : {0.5, 1.0, 2.5}) {
            CHECK(tilde_j(alpha, t) * std::pow(t, alpha) ==
                  doctest::Approx(bessel_j(alpha, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("gegenbauer recurrence against explicit polynomials") {
    CHECK(gegenbauer(0, 1.0, 0.3) == 1.0);
    CHECK(gegenbauer(-1, 2.0, 0.3) == 0.0);
    for (double lam : {0.5, 1.0, 2.0, 3.0}) {
        for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (int k = 0; k <= 3; ++k) {
                CHECK(gegenbauer(k, lam, u) ==
                      doctest::Approx(oracles::gegenbauer_explicit(k, lam, u)).epsilon(1e-14));
            }
        }
    }
    CHECK(gegenbauer(2, 1.0, 0.5) == doctest::Approx(2.0 * 1.0 * 2.0 * 0.25 - 1.0).epsilon(1e-14));
}

TEST_CASE("laguerre recurrence against the explicit sum") {
    CHECK(laguerre(0, 2.3, 1.7) == 1.0);
    for (double a : {0.0, 1.0, 2.5}) {
        for (double x : {0.0, 0.5, 2.0, 6.0}) {
            CHECK(laguerre(1, a, x) == doctest::Approx(1.0 + a - x).epsilon(1e-14));
            for (int j = 0; j <= 6; ++j) {
                CHECK(laguerre(j, a, x) ==
                      doctest::Approx(oracles::laguerre_explicit(j, a, x)).epsilon(1e-12));
            }
        }
    }
    CHECK(laguerre(2, 1.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("gamma function") {
    CHECK(gamma_fn(1.0) == 1.0);
    CHECK(gamma_fn(3.0) == doctest::Approx(2.0));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(2.5) == doctest::Approx(oracles::gamma_lanczos(2.5)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.0), std::domain_error);
}

TEST_CASE("finiteness over the kernel grid range") {
    for (double t : {1e-8, 1.0, 100.0, 1000.0}) {
        CHECK(std::isfinite(tilde_j(1.5, t)));
        CHECK(std::isfinite(bessel_j(1.0, t)));
    }
}
