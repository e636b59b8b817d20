#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clifft/cstft.hpp"
#include "clifft/eigenbasis.hpp"
#include "clifft/kernel.hpp"
#include "clifft/verify.hpp"

#include <json.hpp>

namespace {

using namespace clifft;

constexpr double kSqrt2 = 1.4142135623730951;

struct RunConfig {
    int dim = 4;
    int eigen_max_j = 2;
    int transform_n = 28;
    int coarse_n = 10;
    double window_sigma = 1.0;
    std::string signal = "gaussian";
    std::string sign = "minus";
    int grid_n = 20;
    double grid_radius = 8.0;
    std::string grid_scheme = "hermite";
    std::int64_t qmc_count = 100000;
    std::uint64_t qmc_seed = 20250809;
    std::string out = "-";
    std::string format = "csv";
    double tol = 1e-10;
    int count = 200;       // kernel-table rows
    int sweep_n = 101;     // transform output sweep
    double sweep_radius = 3.0;
    int slice_n = 31;      // spectrogram slice resolution
    double slice_range = 3.0;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path == "-" || path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// blade columns in lexicographic index-set order: grade first, then indices
std::vector<Blade> blade_order(int d) {
    std::vector<Blade> blades;
    for (Blade b = 0; b < (Blade{1u} << d); ++b) blades.push_back(b);
    std::sort(blades.begin(), blades.end(), [](Blade a, Blade b) {
        int ga = blade_grade(a), gb = blade_grade(b);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    return blades;
}

std::string blade_label(Blade b) {
    if (b == 0) return "s";
    std::string s = "e";
    for (int i = 0; b >> i; ++i) {
        if ((b >> i) & 1u) s += std::to_string(i + 1);
    }
    return s;
}

// signal spec: terms separated by ';', each "name" or "name*coeff" where the
// coefficient is a comma-separated sum of blade monomials like "0.8e1,-0.25e34".
// names: "gaussian", "gaussian:sigma", "psi:even|odd:j:k:l"
Multivector parse_clifford_const(const std::string& text, CliffordDim dim) {
    Multivector m(dim);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t epos = tok.find('e');
        double coeff = 1.0;
        Blade blade = 0;
        if (epos == std::string::npos) {
            coeff = std::stod(tok);
        } else {
            std::string num = tok.substr(0, epos);
            if (num.empty() || num == "+") {
                coeff = 1.0;
            } else if (num == "-") {
                coeff = -1.0;
            } else {
                coeff = std::stod(num);
            }
            for (char ch : tok.substr(epos + 1)) {
                if (ch < '1' || ch > '0' + dim.d()) {
                    throw std::runtime_error("signal spec: bad blade index in '" + tok + "'");
                }
                blade |= Blade{1u} << (ch - '1');
            }
        }
        m.add_coeff(blade, coeff);
    }
    return m;
}

CliffordField parse_signal(const std::string& spec, CliffordDim dim) {
    std::vector<CliffordField> terms;
    std::stringstream ss(spec);
    std::string term;
    while (std::getline(ss, term, ';')) {
        if (term.find_first_not_of(" \t") == std::string::npos) continue;
        term.erase(0, term.find_first_not_of(" \t"));
        term.erase(term.find_last_not_of(" \t") + 1);
        std::string name = term;
        std::string coeff_text;
        std::size_t star = term.find('*');
        if (star != std::string::npos) {
            name = term.substr(0, star);
            coeff_text = term.substr(star + 1);
        }
        CliffordField base = CliffordField::zero(dim);
        if (name.rfind("gaussian", 0) == 0) {
            double sigma = 1.0;
            std::size_t colon = name.find(':');
            if (colon != std::string::npos) sigma = std::stod(name.substr(colon + 1));
            base = CliffordField::gaussian(dim, sigma);
        } else if (name.rfind("psi:", 0) == 0) {
            std::stringstream ns(name.substr(4));
            std::string parity, js, ks, ls;
            std::getline(ns, parity, ':');
            std::getline(ns, js, ':');
            std::getline(ns, ks, ':');
            std::getline(ns, ls, ':');
            EigenIndex idx{parity == "odd" ? Parity::Odd : Parity::Even, std::stoi(js),
                           std::stoi(ks), ls.empty() ? 1 : std::stoi(ls)};
            base = psi(idx, dim);
        } else {
            throw std::runtime_error("signal spec: unknown signal '" + name + "'");
        }
        if (!coeff_text.empty()) {
            base = field_right_mul(base, parse_clifford_const(coeff_text, dim));
            base.set_envelope({0.5, std::vector<double>(static_cast<std::size_t>(dim.d()), 0.0)});
        }
        terms.push_back(base);
    }
    if (terms.empty()) throw std::runtime_error("signal spec: empty");
    CliffordField out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) out = field_add(out, terms[i]);
    if (terms.size() > 1) {
        out.set_envelope({0.5, std::vector<double>(static_cast<std::size_t>(dim.d()), 0.0)});
    }
    return out;
}

Grid make_grid(const RunConfig& cfg) {
    if (cfg.grid_scheme == "trapezoid") {
        return build_grid(cfg.dim, GridScheme::TrapezoidBox, cfg.grid_n, cfg.grid_radius);
    }
    return build_grid(cfg.dim, GridScheme::HermiteWeighted, cfg.grid_n, 0.0, kSqrt2);
}

int cmd_kernel_table(const RunConfig& cfg) {
    CliffordDim dim(cfg.dim);
    std::ofstream file;
    std::ostream& os = open_out(cfg.out, file);
    std::vector<Blade> bivs;
    for (int i = 0; i < cfg.dim; ++i)
        for (int j = i + 1; j < cfg.dim; ++j) bivs.push_back((Blade{1u} << i) | (Blade{1u} << j));

    std::uint64_t state = cfg.qmc_seed ^ 0x9e3779b97f4a7c15ull;
    auto next_uniform = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    };

    nlohmann::ordered_json hdr;
    if (cfg.format == "csv") {
        for (int i = 1; i <= cfg.dim; ++i) os << "x" << i << ",";
        for (int i = 1; i <= cfg.dim; ++i) os << "y" << i << ",";
        os << "closed_s";
        for (Blade b : bivs) os << ",closed_" << blade_label(b);
        os << ",series_s";
        for (Blade b : bivs) os << ",series_" << blade_label(b);
        os << ",abs_dev\n";
    }
    for (int row = 0; row < cfg.count; ++row) {
        std::vector<double> x(static_cast<std::size_t>(cfg.dim)), y(static_cast<std::size_t>(cfg.dim));
        for (auto& v : x) v = -3.0 + 6.0 * next_uniform();
        for (auto& v : y) v = -3.0 + 6.0 * next_uniform();
        Multivector kc = kernel_minus_closed(x, y, dim);
        Multivector ks = kernel_minus_series(x, y, dim, cfg.tol);
        double dev = modulus(kc - ks);
        if (cfg.format == "csv") {
            for (double v : x) os << fmt(v) << ",";
            for (double v : y) os << fmt(v) << ",";
            os << fmt(kc.coeff(0).real());
            for (Blade b : bivs) os << "," << fmt(kc.coeff(b).real());
            os << "," << fmt(ks.coeff(0).real());
            for (Blade b : bivs) os << "," << fmt(ks.coeff(b).real());
            os << "," << fmt(dev) << "\n";
        } else {
            nlohmann::ordered_json j;
            j["x"] = x;
            j["y"] = y;
            j["closed_s"] = kc.coeff(0).real();
            j["series_s"] = ks.coeff(0).real();
            for (Blade b : bivs) {
                j["closed_" + blade_label(b)] = kc.coeff(b).real();
                j["series_" + blade_label(b)] = ks.coeff(b).real();
            }
            j["abs_dev"] = dev;
            os << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_transform(const RunConfig& cfg) {
    CliffordDim dim(cfg.dim);
    CliffordField f = parse_signal(cfg.signal, dim);
    Grid grid = make_grid(cfg);
    CliffordField F = cft(f, cfg.sign == "plus" ? Sign::Plus : Sign::Minus, grid);
    std::ofstream file;
    std::ostream& os = open_out(cfg.out, file);
    std::vector<Blade> blades = blade_order(cfg.dim);
    if (cfg.format == "csv") {
        for (int i = 1; i <= cfg.dim; ++i) os << "omega" << i << ",";
        bool first = true;
        for (Blade b : blades) {
            os << (first ? "" : ",") << "re_" << blade_label(b) << ",im_" << blade_label(b);
            first = false;
        }
        os << "\n";
    }
    for (int i = 0; i < cfg.sweep_n; ++i) {
        std::vector<double> omega(static_cast<std::size_t>(cfg.dim), 0.0);
        omega[0] = -cfg.sweep_radius +
                   2.0 * cfg.sweep_radius * static_cast<double>(i) / (cfg.sweep_n - 1);
        Multivector v = F(omega);
        if (cfg.format == "csv") {
            for (double w : omega) os << fmt(w) << ",";
            bool first = true;
            for (Blade b : blades) {
                Complex cv = v.coeff(b);
                os << (first ? "" : ",") << fmt(cv.real()) << "," << fmt(cv.imag());
                first = false;
            }
            os << "\n";
        } else {
            nlohmann::ordered_json j;
            j["omega"] = omega;
            for (Blade b : blades) {
                Complex cv = v.coeff(b);
                j["re_" + blade_label(b)] = cv.real();
                j["im_" + blade_label(b)] = cv.imag();
            }
            os << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_spectrogram(const RunConfig& cfg) {
    CliffordDim dim(cfg.dim);
    CliffordField f = parse_signal(cfg.signal, dim);
    Window g(CliffordField::gaussian(dim, cfg.window_sigma));
    Grid grid = make_grid(cfg);
    std::ofstream file;
    std::ostream& os = open_out(cfg.out, file);
    std::vector<Blade> blades = blade_order(cfg.dim);
    if (cfg.format == "csv") {
        os << "x1,omega1,modulus";
        for (Blade b : blades) os << ",re_" << blade_label(b) << ",im_" << blade_label(b);
        os << "\n";
    }
    for (int ix = 0; ix < cfg.slice_n; ++ix) {
        double xv = -cfg.slice_range +
                    2.0 * cfg.slice_range * static_cast<double>(ix) / (cfg.slice_n - 1);
        for (int iw = 0; iw < cfg.slice_n; ++iw) {
            double wv = -cfg.slice_range +
                        2.0 * cfg.slice_range * static_cast<double>(iw) / (cfg.slice_n - 1);
            std::vector<double> x(static_cast<std::size_t>(cfg.dim), 0.0);
            std::vector<double> omega(static_cast<std::size_t>(cfg.dim), 0.0);
            x[0] = xv;
            omega[0] = wv;
            Grid adapted = vstft_grid(f, g, x, grid, 10);
            Multivector v = vstft(f, g, x, omega, adapted);
            if (cfg.format == "csv") {
                os << fmt(xv) << "," << fmt(wv) << "," << fmt(modulus(v));
                for (Blade b : blades) {
                    Complex cv = v.coeff(b);
                    os << "," << fmt(cv.real()) << "," << fmt(cv.imag());
                }
                os << "\n";
            } else {
                nlohmann::ordered_json j;
                j["x1"] = xv;
                j["omega1"] = wv;
                j["modulus"] = modulus(v);
                for (Blade b : blades) {
                    Complex cv = v.coeff(b);
                    j["re_" + blade_label(b)] = cv.real();
                    j["im_" + blade_label(b)] = cv.imag();
                }
                os << j.dump() << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.dim != 4) {
        std::cerr << "verify: the property suite runs at d = 4 (kernel checks cover d = 2 and 6)\n";
    }
    VerifyConfig vc;
    vc.d = 4;
    vc.window_sigma = cfg.window_sigma;
    vc.qmc_count = cfg.qmc_count;
    vc.qmc_seed = cfg.qmc_seed;
    vc.eigen_max_j = cfg.eigen_max_j;
    vc.transform_n = cfg.transform_n;
    vc.coarse_n = cfg.coarse_n;
    std::vector<CheckRecord> records = run_verify(vc);
    std::ofstream file;
    std::ostream& os = open_out(cfg.out, file);
    os << (cfg.format == "csv" ? render_report_csv(records) : render_report_jsonl(records));
    int failures = 0;
    for (const auto& r : records) {
        if (r.kind == CheckRecord::Assertion && !r.pass) ++failures;
    }
    std::cerr << records.size() << " checks, " << failures << " assertion failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford-Fourier transform and short-time transform toolkit"};
    app.set_config("--config");
    RunConfig cfg;
    app.add_option("--dim", cfg.dim, "even dimension d >= 2")->check(CLI::Range(2, 8));
    app.add_option("--window-sigma", cfg.window_sigma, "gaussian window scale");
    app.add_option("--signal", cfg.signal, "signal spec (gaussian | psi:parity:j:k:l | sums)");
    app.add_option("--grid-n", cfg.grid_n, "quadrature nodes per axis");
    app.add_option("--grid-radius", cfg.grid_radius, "box half-width (trapezoid scheme)");
    app.add_option("--grid-scheme", cfg.grid_scheme, "hermite | trapezoid");
    app.add_option("--qmc-count", cfg.qmc_count, "quasi-random sample count");
    app.add_option("--qmc-seed", cfg.qmc_seed, "quasi-random scrambling seed");
    app.add_option("--out", cfg.out, "output path, - for stdout");
    app.add_option("--format", cfg.format, "csv | json-lines")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    app.add_option("--tol", cfg.tol, "series / comparison tolerance");

    auto* kt = app.add_subcommand("kernel-table", "emit both kernel evaluation paths as CSV");
    kt->add_option("--count", cfg.count, "number of random pairs");
    auto* tr = app.add_subcommand("transform", "evaluate the transform along an axis sweep");
    tr->add_option("--sign", cfg.sign, "minus | plus")->check(CLI::IsMember({"minus", "plus"}));
    tr->add_option("--sweep-n", cfg.sweep_n, "sweep sample count");
    tr->add_option("--sweep-radius", cfg.sweep_radius, "sweep half-width");
    auto* sp = app.add_subcommand("spectrogram", "windowed transform on an (x1, omega1) slice");
    sp->add_option("--slice-n", cfg.slice_n, "slice resolution per axis");
    sp->add_option("--slice-range", cfg.slice_range, "slice half-width");
    auto* vf = app.add_subcommand("verify", "run the property suite and write the report");
    vf->add_option("--eigen-max-j", cfg.eigen_max_j, "largest Laguerre index in the eigen suite");
    vf->add_option("--transform-n", cfg.transform_n, "eigen-suite transform quadrature nodes");
    vf->add_option("--coarse-n", cfg.coarse_n, "nested-operator quadrature nodes");
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);
    try {
        if (kt->parsed()) return cmd_kernel_table(cfg);
        if (tr->parsed()) return cmd_transform(cfg);
        if (sp->parsed()) return cmd_spectrogram(cfg);
        if (vf->parsed()) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
