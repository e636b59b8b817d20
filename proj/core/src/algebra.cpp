#include "clifft/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace clifft {

CliffordDim::CliffordDim(int d) : d_(d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("CliffordDim: dimension must be even and >= 2, got " +
                                    std::to_string(d));
    }
}

BladeProduct blade_mul(Blade a, Blade b) {
    int swaps = 0;
    Blade bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        swaps += std::popcount(a >> (j + 1));
        bb &= bb - 1;
    }
    int sign = (swaps & 1) ? -1 : 1;
    if (std::popcount(a & b) & 1) sign = -sign;  // each contracted e_i^2 = -1
    return {sign, a ^ b};
}

std::string blade_to_string(Blade b) {
    if (b == 0) return "1";
    std::ostringstream os;
    os << "e{";
    bool first = true;
    for (int i = 0; b >> i; ++i) {
        if ((b >> i) & 1u) {
            if (!first) os << ' ';
            os << (i + 1);
            first = false;
        }
    }
    os << "}";
    return os.str();
}

Multivector::Multivector(CliffordDim dim, Complex scalar) : dim_(dim) {
    if (scalar != Complex{}) terms_.emplace_back(0u, scalar);
}

Multivector Multivector::basis(CliffordDim dim, Blade b, Complex coeff) {
    if (b >> dim.d()) {
        throw std::invalid_argument("Multivector::basis: blade index exceeds dimension");
    }
    Multivector m(dim);
    if (coeff != Complex{}) m.terms_.emplace_back(b, coeff);
    return m;
}

Complex Multivector::coeff(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const auto& t, Blade x) { return t.first < x; });
    if (it != terms_.end() && it->first == b) return it->second;
    return {};
}

void Multivector::set_coeff(Blade b, Complex v) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const auto& t, Blade x) { return t.first < x; });
    if (it != terms_.end() && it->first == b) {
        it->second = v;
    } else {
        terms_.insert(it, {b, v});
    }
}

void Multivector::add_coeff(Blade b, Complex v) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const auto& t, Blade x) { return t.first < x; });
    if (it != terms_.end() && it->first == b) {
        it->second += v;
    } else {
        terms_.insert(it, {b, v});
    }
}

bool Multivector::is_zero(double tol) const {
    for (const auto& [b, c] : terms_) {
        if (std::abs(c) > tol) return false;
    }
    return true;
}

void Multivector::prune() {
    std::erase_if(terms_, [](const auto& t) { return t.second == Complex{}; });
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
    for (const auto& [b, c] : o.terms_) add_coeff(b, c);
    prune();
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
    for (const auto& [b, c] : o.terms_) add_coeff(b, -c);
    prune();
    return *this;
}

Multivector& Multivector::operator*=(Complex c) {
    for (auto& t : terms_) t.second *= c;
    prune();
    return *this;
}

Multivector Multivector::grade_part(int g) const {
    Multivector r(dim_);
    for (const auto& [b, c] : terms_) {
        if (blade_grade(b) == g) r.terms_.emplace_back(b, c);
    }
    return r;
}

double Multivector::max_abs_imag() const {
    double m = 0.0;
    for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c.imag()));
    return m;
}

std::string Multivector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        if (c.imag() == 0.0) {
            os << c.real();
        } else {
            os << '(' << c.real() << (c.imag() < 0 ? '-' : '+') << std::abs(c.imag()) << "i)";
        }
        if (b != 0) os << ' ' << blade_to_string(b);
        first = false;
    }
    return os.str();
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("geometric_product: dimension mismatch");
    Multivector r(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            auto [sign, blade] = blade_mul(ba, bb);
            r.add_coeff(blade, static_cast<double>(sign) * ca * cb);
        }
    }
    return r;
}

Multivector clifford_conjugate(const Multivector& a) {
    Multivector r(a.dim());
    for (const auto& [b, c] : a.terms()) {
        r.set_coeff(b, static_cast<double>(blade_conj_sign(b)) * std::conj(c));
    }
    return r;
}

double modulus(const Multivector& a) {
    double s = 0.0;
    for (const auto& [b, c] : a.terms()) s += std::norm(c);
    return std::sqrt(s);
}

double Vector1::norm() const {
    double s = 0.0;
    for (double v : x_) s += v * v;
    return std::sqrt(s);
}

Multivector Vector1::embed(CliffordDim cd) const {
    if (cd.d() != dim()) throw std::invalid_argument("Vector1::embed: dimension mismatch");
    Multivector m(cd);
    for (int i = 0; i < cd.d(); ++i) {
        double v = x_[static_cast<std::size_t>(i)];
        if (v != 0.0) m.set_coeff(Blade{1u} << i, v);
    }
    return m;
}

Vector1 operator+(const Vector1& a, const Vector1& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector1: dimension mismatch");
    std::vector<double> r(a.x_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.x_[i];
    return Vector1(std::move(r));
}

Vector1 operator-(const Vector1& a, const Vector1& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector1: dimension mismatch");
    std::vector<double> r(a.x_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.x_[i];
    return Vector1(std::move(r));
}

Vector1 operator-(const Vector1& a) {
    std::vector<double> r(a.x_);
    for (auto& v : r) v = -v;
    return Vector1(std::move(r));
}

Vector1 operator*(double c, const Vector1& a) {
    std::vector<double> r(a.x_);
    for (auto& v : r) v *= c;
    return Vector1(std::move(r));
}

double inner(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Multivector wedge(std::span<const double> x, std::span<const double> y, CliffordDim dim) {
    if (x.size() != y.size()) throw std::invalid_argument("wedge: dimension mismatch");
    Multivector r(dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            double w = x[i] * y[j] - x[j] * y[i];
            if (w != 0.0) r.set_coeff((Blade{1u} << i) | (Blade{1u} << j), w);
        }
    }
    return r;
}

}  // namespace clifft
