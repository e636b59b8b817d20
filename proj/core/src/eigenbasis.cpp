#include "clifft/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "clifft/specfun.hpp"

namespace clifft {

namespace {

// Exact rational arithmetic for the Dirac nullspace solve. Magnitudes stay
// tiny (entries are small integers), but guard anyway.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::overflow_error("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_zero() const { return num == 0; }
};

long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
    return static_cast<long long>(v);
}

Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    r.num = checked(static_cast<__int128>(a.num) * b.num);
    r.den = checked(static_cast<__int128>(a.den) * b.den);
    r.normalize();
    return r;
}

Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    r.num = checked(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den);
    r.den = checked(static_cast<__int128>(a.den) * b.den);
    r.normalize();
    return r;
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    Rat r;
    r.num = checked(static_cast<__int128>(a.num) * b.den);
    r.den = checked(static_cast<__int128>(a.den) * b.num);
    r.normalize();
    return r;
}

using RatVec = std::vector<Rat>;

// Reduce v against the row-reduced set rows (each with leading pivot position
// normalized to 1). Returns the residual.
RatVec reduce_against(RatVec v, const std::vector<std::pair<std::size_t, RatVec>>& rows) {
    for (const auto& [piv, r] : rows) {
        if (!v[piv].is_zero()) {
            Rat f = v[piv];
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] - f * r[c];
        }
    }
    return v;
}

void insert_row(std::vector<std::pair<std::size_t, RatVec>>& rows, RatVec v) {
    v = reduce_against(std::move(v), rows);
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
            Rat lead = v[c];
            for (auto& x : v) x = x / lead;
            rows.emplace_back(c, std::move(v));
            return;
        }
    }
}

// Monomials of total degree k over d variables, deterministic lexicographic order.
std::vector<std::vector<int>> monomials(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
    };
    if (k == 0) {
        out.push_back(cur);
    } else {
        rec(0, k);
    }
    return out;
}

MonogenicBasis build_monogenic_basis(int k, CliffordDim dim) {
    const int d = dim.d();
    const std::size_t nb = std::size_t{1} << d;
    auto monos_k = monomials(d, k);
    auto monos_km1 = (k > 0) ? monomials(d, k - 1) : std::vector<std::vector<int>>{};
    std::map<std::vector<int>, std::size_t> row_mono_index;
    for (std::size_t i = 0; i < monos_km1.size(); ++i) row_mono_index[monos_km1[i]] = i;

    const std::size_t ncols = monos_k.size() * nb;
    const std::size_t nrows = monos_km1.size() * nb;

    // Dirac matrix over (monomial, blade) coordinates, column-major assembly:
    // column (alpha, A) sends e_i d/dx_i to row (alpha - e_i, sign * (e_i e_A)).
    std::vector<RatVec> mat(nrows, RatVec(ncols));
    for (std::size_t mc = 0; mc < monos_k.size(); ++mc) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
            std::size_t col = mc * nb + bc;
            for (int i = 0; i < d; ++i) {
                int e = monos_k[mc][static_cast<std::size_t>(i)];
                if (e == 0) continue;
                auto alpha = monos_k[mc];
                alpha[static_cast<std::size_t>(i)] -= 1;
                auto [sign, blade] = blade_mul(Blade{1u} << i, static_cast<Blade>(bc));
                std::size_t row = row_mono_index.at(alpha) * nb + blade;
                mat[row][col] = mat[row][col] - Rat(-static_cast<long long>(e) * sign);
            }
        }
    }

    // row echelon form, record pivot columns
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t sel = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (!mat[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == nrows) continue;
        std::swap(mat[r], mat[sel]);
        Rat lead = mat[r][c];
        for (auto& x : mat[r]) x = x / lead;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i != r && !mat[i][c].is_zero()) {
                Rat f = mat[i][c];
                for (std::size_t cc = c; cc < ncols; ++cc) mat[i][cc] = mat[i][cc] - f * mat[r][cc];
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }

    // nullspace vectors in free-column order, scaled to integer entries
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> nullspace;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(ncols);
        v[f] = Rat(1);
        for (std::size_t pr = 0; pr < pivot_cols.size(); ++pr) {
            v[pivot_cols[pr]] = Rat(0) - mat[pr][f];
        }
        long long lcm = 1;
        for (const auto& x : v) lcm = checked(static_cast<__int128>(lcm) / std::gcd(lcm, x.den) * x.den);
        for (auto& x : v) x = x * Rat(lcm);
        nullspace.push_back(std::move(v));
    }

    // greedy right-module generators: keep a vector only if it is not in the
    // right span of those already chosen
    std::vector<std::pair<std::size_t, RatVec>> span_rows;
    std::vector<RatVec> generators;
    for (const auto& v : nullspace) {
        RatVec res = reduce_against(v, span_rows);
        bool zero = std::all_of(res.begin(), res.end(), [](const Rat& x) { return x.is_zero(); });
        if (zero) continue;
        generators.push_back(v);
        for (std::size_t b = 0; b < nb; ++b) {
            RatVec w(ncols);
            for (std::size_t mc = 0; mc < monos_k.size(); ++mc) {
                for (std::size_t bc = 0; bc < nb; ++bc) {
                    const Rat& cv = v[mc * nb + bc];
                    if (cv.is_zero()) continue;
                    auto [sign, blade] = blade_mul(static_cast<Blade>(bc), static_cast<Blade>(b));
                    std::size_t cc = mc * nb + blade;
                    w[cc] = w[cc] - Rat(-sign) * cv;
                }
            }
            insert_row(span_rows, std::move(w));
        }
    }

    MonogenicBasis basis;
    basis.k = k;
    for (const auto& g : generators) {
        PolyMV p(dim);
        for (std::size_t mc = 0; mc < monos_k.size(); ++mc) {
            Multivector coeff(dim);
            for (std::size_t bc = 0; bc < nb; ++bc) {
                const Rat& cv = g[mc * nb + bc];
                if (!cv.is_zero()) {
                    coeff.set_coeff(static_cast<Blade>(bc),
                                    static_cast<double>(cv.num) / static_cast<double>(cv.den));
                }
            }
            if (!coeff.is_zero()) p.add_term(monos_k[mc], coeff);
        }
        if (!dirac_apply(p).is_zero()) {
            throw std::logic_error("monogenic_basis: constructed element fails the Dirac identity");
        }
        basis.elements.push_back(std::move(p));
    }
    return basis;
}

}  // namespace

void PolyMV::add_term(const std::vector<int>& exponents, const Multivector& coeff) {
    if (static_cast<int>(exponents.size()) != dim_.d()) {
        throw std::invalid_argument("PolyMV: exponent arity mismatch");
    }
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector PolyMV::evaluate(std::span<const double> x) const {
    Multivector acc(dim_);
    for (const auto& [exp, coeff] : terms_) {
        double m = 1.0;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            for (int e = 0; e < exp[i]; ++e) m *= x[i];
        }
        acc += coeff * Complex(m);
    }
    return acc;
}

int PolyMV::degree() const {
    int deg = -1;
    for (const auto& [exp, coeff] : terms_) {
        deg = std::max(deg, std::accumulate(exp.begin(), exp.end(), 0));
    }
    return deg;
}

bool PolyMV::is_zero(double tol) const {
    for (const auto& [exp, coeff] : terms_) {
        if (!coeff.is_zero(tol)) return false;
    }
    return true;
}

PolyMV dirac_apply(const PolyMV& p) {
    PolyMV out(p.dim());
    for (const auto& [exp, coeff] : p.terms()) {
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            auto e2 = exp;
            e2[i] -= 1;
            Multivector ei = Multivector::basis(p.dim(), Blade{1u} << i);
            out.add_term(e2, geometric_product(ei, coeff) * Complex(static_cast<double>(exp[i])));
        }
    }
    return out;
}

PolyMV poly_right_mul(const PolyMV& p, Blade b) {
    PolyMV out(p.dim());
    Multivector eb = Multivector::basis(p.dim(), b);
    for (const auto& [exp, coeff] : p.terms()) {
        out.add_term(exp, geometric_product(coeff, eb));
    }
    return out;
}

const MonogenicBasis& monogenic_basis(int k, CliffordDim dim) {
    if (k < 0) throw std::invalid_argument("monogenic_basis: degree must be >= 0");
    static std::map<std::pair<int, int>, MonogenicBasis> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(k, dim.d());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_monogenic_basis(k, dim)).first;
    return it->second;
}

CliffordField psi(const EigenIndex& idx, CliffordDim dim) {
    const MonogenicBasis& basis = monogenic_basis(idx.k, dim);
    if (idx.l < 1 || idx.l > static_cast<int>(basis.elements.size())) {
        throw std::out_of_range("psi: l index outside the monogenic basis range");
    }
    if (idx.j < 0) throw std::out_of_range("psi: j must be >= 0");
    const PolyMV M = basis.elements[static_cast<std::size_t>(idx.l - 1)];
    const int j = idx.j;
    const double alpha = (idx.parity == Parity::Even) ? 0.5 * dim.d() + idx.k - 1.0
                                                      : 0.5 * dim.d() + idx.k;
    const bool odd = (idx.parity == Parity::Odd);
    CliffordField f(
        dim,
        [dim, M, j, alpha, odd](std::span<const double> x) {
            double r2 = 0.0;
            for (double v : x) r2 += v * v;
            double L = laguerre(j, alpha, r2);
            Multivector val = M.evaluate(x);
            if (odd) {
                Multivector xv(dim);
                for (int i = 0; i < dim.d(); ++i) {
                    if (x[static_cast<std::size_t>(i)] != 0.0)
                        xv.set_coeff(Blade{1u} << i, x[static_cast<std::size_t>(i)]);
                }
                val = geometric_product(xv, val);  // 1-vector factor between L and M as printed
            }
            return val * Complex(L * std::exp(-0.5 * r2));
        },
        /*radial=*/idx.parity == Parity::Even && idx.k == 0);
    f.set_envelope({0.5, std::vector<double>(static_cast<std::size_t>(dim.d()), 0.0)});
    return f;
}

Complex expected_eigenvalue(const EigenIndex& idx, CliffordDim dim, Sign sign) {
    const double mp = (sign == Sign::Minus) ? 1.0 : -1.0;
    const double i_d = (dim.d() % 4 == 0) ? 1.0 : -1.0;  // i^d, real for even d
    auto neg_pow = [](int e) { return (e % 2 == 0) ? 1.0 : -1.0; };
    auto mp_pow = [mp](int e) { return (e % 2 == 0) ? 1.0 : mp; };
    if (idx.parity == Parity::Even) {
        return Complex(neg_pow(idx.j + idx.k) * mp_pow(idx.k));
    }
    return Complex(i_d * neg_pow(idx.j + 1) * mp_pow(idx.k + dim.d() - 1));
}

}  // namespace clifft
