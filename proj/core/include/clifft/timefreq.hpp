#ifndef CLIFFT_TIMEFREQ_HPP
#define CLIFFT_TIMEFREQ_HPP

#include "clifft/transform.hpp"

namespace clifft {

/// Generalized translation tau_y. Radial f takes the classical shift
/// f(x - y); otherwise the integral form
///   (2 pi)^{-d/2} int K_-(xi, x) K_-(y, xi) F_- f(xi) d xi
/// is evaluated by quadrature with F_- f computed on `grid`.
CliffordField translate(const CliffordField& f, const Vector1& y, const Grid& grid);

/// Generalized modulation M_y f(x) = K_-(y, x) f(x), kernel on the left.
CliffordField modulate(const CliffordField& f, const Vector1& y);

/// Generalized convolution (f *_Cl g)(x) = (2 pi)^{-d/2} int tau_y f(x) g(y) dy.
CliffordField convolve(const CliffordField& f, const CliffordField& g, const Grid& grid);

/// Commutator field t -> tau_x(M_omega g)(t) - M_omega(tau_x g)(t) for a
/// radial window g; the first term runs through the integral translation,
/// the second through the radial shortcut.
CliffordField commutator_tm(const CliffordField& g, const Vector1& x, const Vector1& omega,
                            const Grid& grid);

struct NormKind {
    enum Kind { Lp, B, Bp, Wpl } kind = Lp;
    double p = 2.0;

    static NormKind lp(double p) { return {Lp, p}; }
    static NormKind b() { return {B, 1.0}; }
    static NormKind bp(double p) { return {Bp, p}; }
    static NormKind wpl(double p) { return {Wpl, p}; }
};

/// Weighted quadrature norms:
///   Lp  : (int |f|^p)^{1/p}
///   B   : int (1+|y|)^lambda |f|
///   Bp  : (int (1+|y|)^lambda |f|^p)^{1/p}
///   Wpl : (int (1+|y|)^{lambda p} |f|^p)^{1/p}
double weighted_norm(const CliffordField& f, NormKind kind, const Grid& grid);

}  // namespace clifft

#endif
