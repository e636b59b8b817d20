#ifndef CLIFFT_VERIFY_HPP
#define CLIFFT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace clifft {

/// Parameters of the property-verification suite. Defaults reproduce the
/// shipped configuration at d = 4.
struct VerifyConfig {
    enum Section : unsigned {
        SecKernel = 1u,
        SecSpecfun = 2u,
        SecEigen = 4u,
        SecTransform = 8u,
        SecTimefreq = 16u,
        SecNorms = 32u,
        SecForms = 64u,
        SecQmc = 128u,
        SecInequalities = 256u,
        SecAll = 0xFFFFu,
    };

    int d = 4;
    unsigned sections = SecAll;
    double window_sigma = 1.0;

    int transform_n = 28;      // transform quadrature nodes per axis (scale sqrt 2)
    int norm_n = 20;           // error-norm grid nodes per axis
    double norm_r2max = 16.0;  // restrict rel-L2 comparisons to |x|^2 <= this
    int coarse_n = 10;         // nested-operator quadrature nodes per axis
    int adapted_n = 8;         // window-adapted rule nodes per axis
    int eigen_max_j = 2;
    int eigen_max_k = 1;

    std::int64_t qmc_count = 100000;
    std::uint64_t qmc_seed = 20250809;

    double tol_eigen = 1e-6;
    double tol_transform = 1e-6;
    double tol_qmc = 0.02;
};

struct CheckRecord {
    std::string name;
    std::string anchor;  // statement identifier for traceability
    enum Kind { Assertion, Diagnostic } kind = Assertion;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

/// Run the full suite. Deterministic: same config, same records, same values.
std::vector<CheckRecord> run_verify(const VerifyConfig& cfg);

/// True when every assertion-class record passes (diagnostics never gate).
bool all_assertions_pass(const std::vector<CheckRecord>& records);

/// Stable textual report renderings (byte-identical across reruns).
std::string render_report_csv(const std::vector<CheckRecord>& records);
std::string render_report_jsonl(const std::vector<CheckRecord>& records);

}  // namespace clifft

#endif
