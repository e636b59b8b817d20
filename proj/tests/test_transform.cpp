#include <doctest.h>

#include <cmath>

#include "clifft/eigenbasis.hpp"
#include "clifft/transform.hpp"

using namespace clifft;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;

Grid tgrid() { return build_grid(4, GridScheme::HermiteWeighted, 20, 0.0, kSqrt2); }
Grid ngrid() { return build_grid(4, GridScheme::HermiteWeighted, 16, 0.0, kSqrt2); }
}

TEST_CASE("gaussian is a fixed point of the minus transform") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    Grid g = tgrid();
    CliffordField F = cft(f, Sign::Minus, g);
    CHECK(rel_l2_error(F, f, ngrid(), 16.0) < 1e-6);
    CHECK(F.radial());
    // pointwise values away from the grid
    std::vector<double> p{0.4, -1.1, 0.2, 0.7};
    double r2 = 0.16 + 1.21 + 0.04 + 0.49;
    CHECK(F(p).coeff(0).real() == doctest::Approx(std::exp(-0.5 * r2)).epsilon(1e-9));
}

TEST_CASE("zero transforms to zero") {
    CliffordDim dim(4);
    Grid g = build_grid(4, GridScheme::HermiteWeighted, 8, 0.0, kSqrt2);
    CliffordField F = cft(CliffordField::zero(dim), Sign::Minus, g);
    CHECK(modulus(F(std::vector<double>{0.5, 0.0, 0.0, 0.0})) == 0.0);
}

TEST_CASE("odd gaussian eigenfunction has eigenvalue -1") {
    CliffordDim dim(4);
    CliffordField f = psi({Parity::Odd, 0, 0, 1}, dim);
    Grid g = tgrid();
    CliffordField F = cft(f, Sign::Minus, g);
    CliffordField expect = field_scale(f, -1.0);
    CHECK(rel_l2_error(F, expect, ngrid(), 16.0) < 1e-6);
}

TEST_CASE("inverse undoes the transform on the gaussian") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    Grid g = tgrid();
    Grid mid = build_grid(4, GridScheme::HermiteWeighted, 14, 0.0, kSqrt2);
    CliffordField F = cft(f, Sign::Minus, g);
    CliffordField back = cft_inverse(F, Sign::Minus, mid);
    CHECK(rel_l2_error(back, f, ngrid(), 14.0) < 1e-6);
    // zero case
    CliffordField z = cft_inverse(CliffordField::zero(dim), Sign::Minus,
                                  build_grid(4, GridScheme::HermiteWeighted, 6, 0.0, kSqrt2));
    CHECK(modulus(z(std::vector<double>{0.0, 0.0, 0.0, 0.0})) == 0.0);
}

TEST_CASE("plancherel and parseval on a psi combination") {
    CliffordDim dim(4);
    Multivector alpha = Multivector::scalar(dim, 1.0);
    alpha.set_coeff(0b0011, 0.5);
    CliffordField f = field_add(psi({Parity::Even, 0, 0, 1}, dim),
                                field_right_mul(psi({Parity::Odd, 0, 0, 1}, dim), alpha));
    f.set_envelope({0.5, std::vector<double>(4, 0.0)});
    CliffordField g = psi({Parity::Even, 1, 0, 1}, dim);
    Grid tg = tgrid();
    Grid norm = ngrid();
    CliffordField Ff = cft(f, Sign::Minus, tg);
    CliffordField Fg = cft(g, Sign::Minus, tg);
    const double ball = 22.0;
    double nf = l2_norm(f, norm, ball);
    CHECK(std::abs(l2_norm(Ff, norm, ball) - nf) / nf < 1e-6);
    Multivector ip = l2_inner(f, g, norm, ball);
    Multivector ipF = l2_inner(Ff, Fg, norm, ball);
    CHECK(modulus(ip - ipF) / std::max(modulus(ip), 1e-12) < 1e-6);
    // <psi00, psi00> = pi^2 for the d = 4 gaussian
    CliffordField p0 = psi({Parity::Even, 0, 0, 1}, dim);
    Multivector self = l2_inner(p0, p0, tg);
    CHECK(self.coeff(0).real() == doctest::Approx(kPi * kPi).epsilon(1e-8));
    // conjugate symmetry of the inner product
    Multivector ip_rev = l2_inner(g, f, norm, ball);
    CHECK(modulus(clifford_conjugate(ip) - ip_rev) < 1e-10 * (1.0 + modulus(ip)));
}

TEST_CASE("partial transform reduces to the transform in the second slot") {
    CliffordDim dim(4);
    Grid g = build_grid(4, GridScheme::HermiteWeighted, 10, 0.0, kSqrt2);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    // F(x, t) = f(t), independent of x
    PairField F(dim, [f](std::span<const double>, std::span<const double> t) { return f(t); });
    PairField P = partial_cft(F, g);
    CliffordField Ff = cft(f, Sign::Minus, g);
    std::vector<double> x1{1.0, 0.0, 0.0, 0.0}, x2{0.0, -2.0, 1.0, 0.0};
    std::vector<double> w{0.5, 0.5, 0.0, 0.0};
    Multivector a = P(x1, w);
    Multivector b = P(x2, w);
    CHECK(modulus(a - b) < 1e-12);
    CHECK(modulus(a - Ff(w)) < 1e-9);
    // zero pair function
    PairField Z(dim, [dim](std::span<const double>, std::span<const double>) {
        return Multivector(dim);
    });
    CHECK(modulus(partial_cft(Z, g)(x1, w)) == 0.0);
}

TEST_CASE("asymmetric coordinate transform") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    CliffordField h = psi({Parity::Odd, 0, 0, 1}, dim);
    PairField T = asymmetric_coord(PairField::tensor(h, f));
    std::vector<double> x{0.3, -0.2, 0.1, 0.4}, t{1.0, 0.5, -0.3, 0.2};
    std::vector<double> tmx(4);
    for (int i = 0; i < 4; ++i) tmx[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
    Multivector expect = geometric_product(h(t), f(tmx));
    CHECK(modulus(T(x, t) - expect) < 1e-14);
    // applying T twice, compared against the hand-expanded composition
    PairField TT = asymmetric_coord(T);
    // TT F(x,t) = (TF)(t, t-x) = F(t-x, (t-x)-t) = F(t-x, -x)
    std::vector<double> mx(4);
    for (int i = 0; i < 4; ++i) mx[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(i)];
    Multivector expect2 = geometric_product(h(tmx), f(mx));
    CHECK(modulus(TT(x, t) - expect2) < 1e-14);
    // constant stays constant
    PairField C(dim, [dim](std::span<const double>, std::span<const double>) {
        return Multivector::scalar(dim, 3.0);
    });
    CHECK(modulus(asymmetric_coord(C)(x, t) - Multivector::scalar(dim, 3.0)) == 0.0);
}
