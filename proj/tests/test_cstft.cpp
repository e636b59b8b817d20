#include <doctest.h>

#include <cmath>

#include "clifft/cstft.hpp"
#include "clifft/eigenbasis.hpp"

using namespace clifft;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;

Grid base_grid() { return build_grid(4, GridScheme::HermiteWeighted, 12, 0.0, kSqrt2); }
}

TEST_CASE("window validation") {
    CliffordDim dim(4);
    CHECK_THROWS_AS(Window(psi({Parity::Odd, 0, 0, 1}, dim)), std::invalid_argument);
    Window w(CliffordField::gaussian(dim, 1.0));
    // int g^2 = pi^2 for the unit gaussian at d = 4
    CHECK(w.square_integral(base_grid()) == doctest::Approx(kPi * kPi).epsilon(1e-10));
}

TEST_CASE("gaussian pair value at the origin is 1/4") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    Window g(CliffordField::gaussian(dim, 1.0));
    std::vector<double> zero(4, 0.0);
    Multivector v = vstft(f, g, zero, zero, base_grid());
    CHECK(modulus(v - Multivector::scalar(dim, 0.25)) < 1e-10);
    // zero signal
    Multivector z = vstft(CliffordField::zero(dim), g, zero, zero, base_grid());
    CHECK(modulus(z) == 0.0);
}

TEST_CASE("adapted rule matches the plain grid") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    Window g(CliffordField::gaussian(dim, 1.0));
    std::vector<double> x{0.8, -0.4, 0.2, 0.0}, w{0.5, 0.5, 0.0, -0.3};
    Grid adapted = vstft_grid(f, g.field().envelope() ? g : g, x, base_grid(), 8);
    CHECK(!adapted.offset.empty());
    Multivector a = vstft(f, g, x, w, adapted);
    Multivector b = vstft(f, g, x, w, build_grid(4, GridScheme::HermiteWeighted, 16, 0.0, kSqrt2));
    CHECK(modulus(a - b) < 1e-9);
}

TEST_CASE("right linearity of the windowed transform") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    CliffordField h = psi({Parity::Odd, 0, 0, 1}, dim);
    Window g(CliffordField::gaussian(dim, 1.0));
    Multivector alpha = Multivector::basis(dim, 0b0011, 0.9);
    Multivector beta = Multivector::scalar(dim, Complex{0.4, -0.2});
    CliffordField combo = field_add(field_right_mul(f, alpha), field_right_mul(h, beta));
    Grid grid = base_grid();
    std::vector<double> x{0.5, 0.0, -0.5, 0.0}, w{0.0, 0.7, 0.0, 0.0};
    Multivector lhs = vstft(combo, g, x, w, grid);
    Multivector rhs = geometric_product(vstft(f, g, x, w, grid), alpha) +
                      geometric_product(vstft(h, g, x, w, grid), beta);
    CHECK(modulus(lhs - rhs) < 1e-10 * (1.0 + modulus(rhs)));
}

TEST_CASE("equivalent forms at a probe point") {
    CliffordDim dim(4);
    CliffordField f = field_add(CliffordField::gaussian(dim, 1.0),
                                field_right_mul(psi({Parity::Odd, 0, 0, 1}, dim),
                                                Multivector::basis(dim, 0b0010, 0.4)));
    f.set_envelope({0.5, std::vector<double>(4, 0.0)});
    Window g(CliffordField::gaussian(dim, 1.0));
    Grid grid = build_grid(4, GridScheme::HermiteWeighted, 10, 0.0, kSqrt2);
    Vector1 x{0.6, 0.0, -0.3, 0.0}, w{0.0, 0.5, 0.0, 0.4};
    VstftForms forms = vstft_forms(f, g, x, w, grid);
    CHECK(modulus(forms.imp - forms.definition) < 1e-12);
    CHECK(modulus(forms.tensor - forms.definition) < 1e-8);
    CHECK(modulus(forms.f2 - forms.definition) < 1e-4);
    CHECK(modulus(forms.fi - forms.definition) < 1e-4);
    CHECK(modulus(forms.f5 - forms.definition) < 1e-4);
    // commutator-free degeneration at x = 0: fi reduces to the swapped transform
    Vector1 zero{0.0, 0.0, 0.0, 0.0};
    VstftForms at0 = vstft_forms(f, g, zero, w, grid);
    CHECK(modulus(at0.fi - at0.definition) < 1e-4);
}

TEST_CASE("reproducing kernel at the diagonal") {
    CliffordDim dim(4);
    Window g(CliffordField::gaussian(dim, 1.0));
    Grid grid = base_grid();
    ReproducingKernelArgs args{Vector1{0.0, 0.0, 0.0, 0.0}, Vector1{0.0, 0.0, 0.0, 0.0},
                               Vector1{0.0, 0.0, 0.0, 0.0}, Vector1{0.0, 0.0, 0.0, 0.0}};
    Multivector k = reproducing_kernel(g, args, grid);
    // diagonal value is real-scalar dominated
    CHECK(k.coeff(0).real() > 0.0);
    CHECK(k.max_abs_imag() < 1e-12);
    CHECK(modulus(k - k.grade_part(0)) < 1e-10);
    // zero-norm window rejected
    CliffordField zero_window(dim, [dim](std::span<const double>) { return Multivector(dim); },
                              true);
    Window zw(zero_window);
    CHECK_THROWS_AS(reproducing_kernel(zw, args, grid), std::invalid_argument);
}

TEST_CASE("small-sample orthogonality sanity") {
    CliffordDim dim(4);
    CliffordField f = CliffordField::gaussian(dim, 1.0);
    Window g(CliffordField::gaussian(dim, 1.0));
    QmcSampler sampler(8, 20000, 77);
    OrthogonalityResult res = orthogonality_check(f, f, g, g, sampler, base_grid(), 8);
    CHECK(res.rhs.coeff(0).real() == doctest::Approx(std::pow(kPi, 4)).epsilon(1e-7));
    CHECK(res.rel_dev < 0.1);  // loose at this sample count; acceptance runs 1e6
}
