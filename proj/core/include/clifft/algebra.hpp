#ifndef CLIFFT_ALGEBRA_HPP
#define CLIFFT_ALGEBRA_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace clifft {

using Complex = std::complex<double>;

/// Transform branch selector: the minus or plus Clifford-Fourier kernel.
enum class Sign { Minus, Plus };

/// Even dimension d >= 2 together with the half-dimension parameter
/// lambda = (d-2)/2 that drives all kernel orders and weight exponents.
class CliffordDim {
public:
    explicit CliffordDim(int d);
    int d() const { return d_; }
    double lambda() const { return 0.5 * (d_ - 2); }
    int lambda_int() const { return (d_ - 2) / 2; }
    bool operator==(const CliffordDim& o) const { return d_ == o.d_; }
    bool operator!=(const CliffordDim& o) const { return d_ != o.d_; }

private:
    int d_;
};

/// Basis blade e_A as a bitmask over {1..d}; bit i-1 set means index i is present.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return std::popcount(b); }

struct BladeProduct {
    int sign;
    Blade blade;
};

/// Sign and resulting blade of e_A e_B under e_i e_j = -e_j e_i (i != j), e_i^2 = -1.
BladeProduct blade_mul(Blade a, Blade b);

/// Sign of the Clifford conjugate of a blade: conj(e_A) = sign * e_A.
inline int blade_conj_sign(Blade b) {
    int g = blade_grade(b);
    return (g * (g + 1) / 2) % 2 ? -1 : 1;
}

std::string blade_to_string(Blade b);

/// Element of the complexified Clifford algebra R_d (x) C, stored as a sparse
/// blade -> coefficient map in increasing bitmask order.
class Multivector {
public:
    explicit Multivector(CliffordDim dim) : dim_(dim) {}
    Multivector(CliffordDim dim, Complex scalar);

    static Multivector zero(CliffordDim dim) { return Multivector(dim); }
    static Multivector scalar(CliffordDim dim, Complex v) { return {dim, v}; }
    static Multivector basis(CliffordDim dim, Blade b, Complex coeff = 1.0);

    CliffordDim dim() const { return dim_; }

    Complex coeff(Blade b) const;
    void set_coeff(Blade b, Complex v);
    void add_coeff(Blade b, Complex v);

    const std::vector<std::pair<Blade, Complex>>& terms() const { return terms_; }
    bool is_zero(double tol = 0.0) const;

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(Complex c);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, Complex c) { return a *= c; }
    friend Multivector operator*(Complex c, Multivector a) { return a *= c; }

    Multivector grade_part(int g) const;
    double max_abs_imag() const;

    std::string to_string() const;

private:
    CliffordDim dim_;
    std::vector<std::pair<Blade, Complex>> terms_;  // sorted by blade, no explicit zeros kept
    void prune();
};

/// Geometric product. Throws std::invalid_argument on dimension mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Clifford conjugation: anti-automorphism with conj(e_i) = -e_i and complex
/// conjugation of the coefficients.
Multivector clifford_conjugate(const Multivector& a);

/// Coefficient modulus |a| = sqrt(sum_A |a_A|^2).
double modulus(const Multivector& a);

/// Point of R^d identified with the grade-1 element x_1 e_1 + ... + x_d e_d.
class Vector1 {
public:
    Vector1() = default;
    explicit Vector1(std::vector<double> comps) : x_(std::move(comps)) {}
    Vector1(std::initializer_list<double> comps) : x_(comps) {}

    int dim() const { return static_cast<int>(x_.size()); }
    double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return x_[static_cast<std::size_t>(i)]; }
    std::span<const double> span() const { return x_; }
    const std::vector<double>& components() const { return x_; }

    double norm() const;
    Multivector embed(CliffordDim dim) const;

    friend Vector1 operator+(const Vector1& a, const Vector1& b);
    friend Vector1 operator-(const Vector1& a, const Vector1& b);
    friend Vector1 operator-(const Vector1& a);
    friend Vector1 operator*(double c, const Vector1& a);

private:
    std::vector<double> x_;
};

double inner(std::span<const double> x, std::span<const double> y);
Multivector wedge(std::span<const double> x, std::span<const double> y, CliffordDim dim);

inline double inner(const Vector1& x, const Vector1& y) { return inner(x.span(), y.span()); }
inline Multivector wedge(const Vector1& x, const Vector1& y, CliffordDim dim) {
    return wedge(x.span(), y.span(), dim);
}

}  // namespace clifft

#endif
