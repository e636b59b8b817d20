#include "clifft/field.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace clifft {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<std::int64_t> quantize(std::span<const double> x) {
    std::vector<std::int64_t> k(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        k[i] = static_cast<std::int64_t>(std::llround(x[i] * 1099511627776.0));  // 2^40
    }
    return k;
}

}  // namespace

struct CliffordField::Memo {
    std::unordered_map<std::vector<std::int64_t>, Multivector, KeyHash> map;
    std::shared_mutex mutex;
};

CliffordField::CliffordField(CliffordDim dim, EvalFn fn, bool radial)
    : dim_(dim), fn_(std::move(fn)), radial_(radial), memo_(std::make_shared<Memo>()) {}

Multivector CliffordField::eval_memo(std::span<const double> x) const {
    auto key = quantize(x);
    {
        std::shared_lock lock(memo_->mutex);
        auto it = memo_->map.find(key);
        if (it != memo_->map.end()) return it->second;
    }
    Multivector v = fn_(x);
    {
        std::unique_lock lock(memo_->mutex);
        memo_->map.emplace(std::move(key), v);  // last writer wins; values deterministic
    }
    return v;
}

CliffordField CliffordField::zero(CliffordDim dim) {
    return CliffordField(dim, [dim](std::span<const double>) { return Multivector(dim); }, true);
}

CliffordField CliffordField::gaussian(CliffordDim dim, double sigma) {
    double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    CliffordField f(
        dim,
        [dim, inv2s2](std::span<const double> x) {
            return Multivector::scalar(dim, std::exp(-inv2s2 * inner(x, x)));
        },
        true);
    f.set_envelope({inv2s2, std::vector<double>(static_cast<std::size_t>(dim.d()), 0.0)});
    return f;
}

CliffordField field_add(const CliffordField& f, const CliffordField& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("field_add: dimension mismatch");
    CliffordField r(
        f.dim(), [f, g](std::span<const double> x) { return f(x) + g(x); },
        f.radial() && g.radial());
    if (f.envelope() && g.envelope() && f.envelope()->center == g.envelope()->center) {
        r.set_envelope({std::min(f.envelope()->a, g.envelope()->a), f.envelope()->center});
    }
    return r;
}

CliffordField field_scale(const CliffordField& f, Complex c) {
    CliffordField r(
        f.dim(), [f, c](std::span<const double> x) { return f(x) * c; }, f.radial());
    if (f.envelope()) r.set_envelope(*f.envelope());
    return r;
}

CliffordField field_right_mul(const CliffordField& f, const Multivector& alpha) {
    CliffordField r(
        f.dim(),
        [f, alpha](std::span<const double> x) { return geometric_product(f(x), alpha); }, false);
    if (f.envelope()) r.set_envelope(*f.envelope());
    return r;
}

CliffordField field_pointwise_mul(const CliffordField& f, const CliffordField& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("field_pointwise_mul: dimension mismatch");
    CliffordField r(
        f.dim(),
        [f, g](std::span<const double> x) { return geometric_product(f(x), g(x)); },
        f.radial() && g.radial());
    if (f.envelope() && g.envelope() && f.envelope()->center == g.envelope()->center) {
        r.set_envelope({f.envelope()->a + g.envelope()->a, f.envelope()->center});
    }
    return r;
}

PairField PairField::tensor(const CliffordField& f, const CliffordField& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("PairField::tensor: dimension mismatch");
    return PairField(f.dim(), [f, g](std::span<const double> x, std::span<const double> t) {
        return geometric_product(f(x), g(t));
    });
}

PairField asymmetric_coord(const PairField& F) {
    return PairField(F.dim(), [F](std::span<const double> x, std::span<const double> t) {
        std::vector<double> tmx(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) tmx[i] = t[i] - x[i];
        return F(t, tmx);
    });
}

}  // namespace clifft
