#include <doctest.h>

#include <cstdint>

#include "clifft/algebra.hpp"

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
    double sym() { return 2.0 * uniform() - 1.0; }
};

Multivector random_mv(Rng& rng, CliffordDim dim, int terms) {
    Multivector m(dim);
    for (int i = 0; i < terms; ++i) {
        Blade b = static_cast<Blade>(rng.uniform() * (1u << dim.d()));
        m.add_coeff(b, Complex{rng.sym(), rng.sym()});
    }
    return m;
}

Vector1 random_vec(Rng& rng, int d) {
    std::vector<double> v(static_cast<std::size_t>(d));
    for (auto& c : v) c = 2.0 * rng.sym();
    return Vector1(std::move(v));
}

}  // namespace

TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(CliffordDim(3), std::invalid_argument);
    CHECK_THROWS_AS(CliffordDim(0), std::invalid_argument);
    CHECK(CliffordDim(4).lambda() == doctest::Approx(1.0));
    CHECK(CliffordDim(6).lambda() == doctest::Approx(2.0));
    CHECK(CliffordDim(2).lambda() == doctest::Approx(0.0));
}

TEST_CASE("generator relations") {
    CliffordDim dim(4);
    Multivector e1 = Multivector::basis(dim, 0b0001);
    Multivector e2 = Multivector::basis(dim, 0b0010);
    CHECK(modulus(geometric_product(e1, e1) - Multivector::scalar(dim, -1.0)) == 0.0);
    CHECK(modulus(geometric_product(e1, e2) - Multivector::basis(dim, 0b0011)) == 0.0);
    CHECK(modulus(geometric_product(e2, e1) + Multivector::basis(dim, 0b0011)) == 0.0);
    // identity element
    Rng rng(1);
    Multivector a = random_mv(rng, dim, 6);
    CHECK(modulus(geometric_product(Multivector::scalar(dim, 1.0), a) - a) == 0.0);
}

TEST_CASE("associativity on random triples") {
    for (int d : {2, 4, 6}) {
        CliffordDim dim(d);
        Rng rng(17 + static_cast<std::uint64_t>(d));
        for (int i = 0; i < 1000 / (d * d); ++i) {
            Multivector a = random_mv(rng, dim, 5);
            Multivector b = random_mv(rng, dim, 5);
            Multivector c = random_mv(rng, dim, 5);
            Multivector lhs = geometric_product(geometric_product(a, b), c);
            Multivector rhs = geometric_product(a, geometric_product(b, c));
            double scale = modulus(lhs) + 1.0;
            CHECK(modulus(lhs - rhs) / scale < 1e-13);
        }
    }
}

TEST_CASE("conjugation is an anti-automorphism") {
    CliffordDim dim(4);
    Multivector e1 = Multivector::basis(dim, 0b0001);
    CHECK(modulus(clifford_conjugate(e1) + e1) == 0.0);
    Multivector alpha = Multivector::scalar(dim, Complex{2.0, 3.0});
    CHECK(clifford_conjugate(alpha).coeff(0) == Complex{2.0, -3.0});
    Multivector e12 = Multivector::basis(dim, 0b0011);
    CHECK(modulus(clifford_conjugate(e12) + e12) == 0.0);

    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Multivector a = random_mv(rng, dim, 5);
        Multivector b = random_mv(rng, dim, 5);
        CHECK(modulus(clifford_conjugate(clifford_conjugate(a)) - a) == 0.0);
        Multivector lhs = clifford_conjugate(geometric_product(a, b));
        Multivector rhs = geometric_product(clifford_conjugate(b), clifford_conjugate(a));
        CHECK(modulus(lhs - rhs) / (modulus(lhs) + 1.0) < 1e-13);
    }
}

TEST_CASE("1-vector identities") {
    CliffordDim dim(4);
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Vector1 x = random_vec(rng, 4);
        Vector1 y = random_vec(rng, 4);
        Multivector xe = x.embed(dim);
        Multivector ye = y.embed(dim);
        // embedded square is minus the squared norm
        Multivector sq = geometric_product(xe, xe);
        CHECK(modulus(sq + Multivector::scalar(dim, x.norm() * x.norm())) < 1e-13 * (1 + x.norm() * x.norm()));
        // split into scalar and 2-vector parts
        Multivector prod = geometric_product(xe, ye);
        Multivector split = Multivector::scalar(dim, -inner(x, y)) + wedge(x, y, dim);
        CHECK(modulus(prod - split) < 1e-13 * (1 + modulus(prod)));
        // triangle inequality and the product modulus bound
        CHECK((x + y).norm() <= x.norm() + y.norm() + 1e-14);
        CHECK(modulus(prod) <= std::pow(2.0, 4) * x.norm() * y.norm() + 1e-14);
    }
    CHECK(modulus(wedge(Vector1{1.0, 2.0, 0.0, 0.5}, Vector1{1.0, 2.0, 0.0, 0.5}, dim)) == 0.0);
    CHECK(inner(Vector1{1.0, 0.0, 0.0, 0.0}, Vector1{1.0, 0.0, 0.0, 0.0}) == 1.0);
}

TEST_CASE("modulus and rendering") {
    CliffordDim dim(4);
    CHECK(modulus(Multivector(dim)) == 0.0);
    Multivector a = Multivector::basis(dim, 0b0001);
    a.add_coeff(0b0010, 1.0);
    CHECK(modulus(a) == doctest::Approx(std::sqrt(2.0)));
    CHECK(a.to_string() == "1 e{1} + 1 e{2}");
    CHECK(Multivector(dim).to_string() == "0");
    CHECK(blade_to_string(0) == "1");
    CHECK(blade_to_string(0b1011) == "e{1 2 4}");
}

TEST_CASE("dimension mismatch is rejected") {
    Multivector a(CliffordDim(4));
    Multivector b(CliffordDim(6));
    CHECK_THROWS_AS(geometric_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(inner(Vector1{1.0, 0.0}, Vector1{1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
}
