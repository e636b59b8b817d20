#ifndef CLIFFT_FIELD_HPP
#define CLIFFT_FIELD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "clifft/algebra.hpp"

namespace clifft {

/// Gaussian envelope metadata: the field decays like poly * exp(-a |x - c|^2).
/// Used to build product-adapted quadrature rules; absence means unknown decay.
struct GaussEnvelope {
    double a = 0.0;
    std::vector<double> center;
};

/// Evaluable function R^d -> multivector with a radial flag. Values are
/// deterministic; evaluation is safe to call concurrently. A small memo cache
/// keyed by quantized coordinates stabilizes nested-quadrature costs.
class CliffordField {
public:
    using EvalFn = std::function<Multivector(std::span<const double>)>;

    CliffordField(CliffordDim dim, EvalFn fn, bool radial = false);

    CliffordDim dim() const { return dim_; }
    bool radial() const { return radial_; }

    Multivector operator()(std::span<const double> x) const { return fn_(x); }
    Multivector operator()(const Vector1& x) const { return fn_(x.span()); }

    /// Evaluation through the shared memo cache (quantized-coordinate key).
    Multivector eval_memo(std::span<const double> x) const;

    const std::optional<GaussEnvelope>& envelope() const { return envelope_; }
    CliffordField& set_envelope(GaussEnvelope e) {
        envelope_ = std::move(e);
        return *this;
    }

    static CliffordField zero(CliffordDim dim);
    /// exp(-|x|^2 / (2 sigma^2)), radial scalar.
    static CliffordField gaussian(CliffordDim dim, double sigma = 1.0);

private:
    struct Memo;
    CliffordDim dim_;
    EvalFn fn_;
    bool radial_;
    std::optional<GaussEnvelope> envelope_;
    std::shared_ptr<Memo> memo_;
};

/// Pointwise sum, scalar multiple, right multiplication by a Clifford
/// constant, and pointwise geometric product of fields.
CliffordField field_add(const CliffordField& f, const CliffordField& g);
CliffordField field_scale(const CliffordField& f, Complex c);
CliffordField field_right_mul(const CliffordField& f, const Multivector& alpha);
CliffordField field_pointwise_mul(const CliffordField& f, const CliffordField& g);

/// Function on R^d x R^d, evaluated as F(x, t).
class PairField {
public:
    using EvalFn = std::function<Multivector(std::span<const double>, std::span<const double>)>;
    PairField(CliffordDim dim, EvalFn fn) : dim_(dim), fn_(std::move(fn)) {}

    CliffordDim dim() const { return dim_; }
    Multivector operator()(std::span<const double> x, std::span<const double> t) const {
        return fn_(x, t);
    }

    static PairField tensor(const CliffordField& f, const CliffordField& g);

private:
    CliffordDim dim_;
    EvalFn fn_;
};

/// Asymmetric coordinate transform T F(x,t) = F(t, t-x).
PairField asymmetric_coord(const PairField& F);

}  // namespace clifft

#endif
