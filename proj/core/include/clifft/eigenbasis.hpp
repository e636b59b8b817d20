#ifndef CLIFFT_EIGENBASIS_HPP
#define CLIFFT_EIGENBASIS_HPP

#include <map>

#include "clifft/field.hpp"

namespace clifft {

/// Polynomial with multivector coefficients: map from exponent multi-indices
/// over x_1..x_d to coefficients.
class PolyMV {
public:
    explicit PolyMV(CliffordDim dim) : dim_(dim) {}

    CliffordDim dim() const { return dim_; }
    const std::map<std::vector<int>, Multivector>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Multivector& coeff);
    Multivector evaluate(std::span<const double> x) const;
    int degree() const;
    bool is_zero(double tol = 0.0) const;

private:
    CliffordDim dim_;
    std::map<std::vector<int>, Multivector> terms_;
};

/// Left Dirac action sum_i e_i d/dx_i; lowers degree by one.
PolyMV dirac_apply(const PolyMV& p);

/// Right multiplication p * e_B (constant blade on the right).
PolyMV poly_right_mul(const PolyMV& p, Blade b);

/// Basis of the spherical monogenics of degree k: homogeneous degree-k
/// polynomials annihilated by the Dirac operator, as generators of the
/// right module (solver kernel-column order, deterministic). Construction is
/// exact rational linear algebra; elements carry integer coefficients so the
/// Dirac identity holds exactly in floating point too.
struct MonogenicBasis {
    int k = 0;
    std::vector<PolyMV> elements;
};

const MonogenicBasis& monogenic_basis(int k, CliffordDim dim);

enum class Parity { Even, Odd };

struct EigenIndex {
    Parity parity = Parity::Even;
    int j = 0;
    int k = 0;
    int l = 1;  // 1-based position in monogenic_basis(k)
};

/// Schwartz eigenbasis members:
///   even:  L_j^{d/2+k-1}(|x|^2) M_k^{(l)}(x) exp(-|x|^2/2)
///   odd :  L_j^{d/2+k}(|x|^2) x M_k^{(l)}(x) exp(-|x|^2/2)
/// with the 1-vector factor placed between L and M as printed.
CliffordField psi(const EigenIndex& idx, CliffordDim dim);

/// Transform eigenvalue of psi_{j,k,l}:
///   F_sign(psi_{2j,k,l})   = (-1)^{j+k} (mp)^k psi
///   F_sign(psi_{2j+1,k,l}) = i^d (-1)^{j+1} (mp)^{k+d-1} psi
/// where mp = +1 for the minus transform and -1 for the plus transform.
Complex expected_eigenvalue(const EigenIndex& idx, CliffordDim dim, Sign sign);

}  // namespace clifft

#endif
