#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ahg/gauduchon.hpp"

namespace ahg {

struct SuiteConfig {
    int points = 100;
    std::uint64_t seed = 2024;
    std::vector<double> t_values; // empty -> default set incl. 1 - 1/(2(n-1))
    double tol_abs = 1e-8;
    double tol_rel = 1e-6;
    double class_tol = 1e-12;
};

std::vector<double> default_t_values(int n);
/// Smaller default used by the reporting front ends.
std::vector<double> cli_default_t_values(int n);

struct IdentityResult {
    std::string identity_id;
    int point_index = -1;
    std::vector<double> coords;
    std::optional<double> t;
    double lhs = 0, rhs = 0;
    double abs_err = 0, rel_err = 0;
    bool pass = false;
    std::string error; // nonempty when evaluation threw
};

struct IdentityValue {
    std::optional<double> t;
    double lhs = 0, rhs = 0;
};

enum class Hypothesis { None, Integrable, Surface, HigherDim, IntegrableHigherDim };

struct IdentityInfo {
    std::string id;
    std::string anchor; // section key in docs/conventions.md
    Hypothesis hypothesis = Hypothesis::None;
    double tol_abs = -1; // negative -> use the config tolerance
    std::function<std::vector<IdentityValue>(const FullPoint&, const SuiteConfig&)> eval;
};

const std::vector<IdentityInfo>& identity_registry();

bool hypothesis_met(Hypothesis h, const FullPoint& fp);

std::vector<IdentityResult> run_pointwise_suite(const Manifold& m, const SuiteConfig& cfg);

struct IntegralEstimate {
    double value = 0;
    std::optional<double> std_error; // reported for quasi-random only
    int samples = 0;
    std::string method; // "lattice-quadrature" or "quasi-random"
};

using PointScalar = std::function<double(const FullPoint&)>;

/// Integral of a scalar against dv.  Homogeneous members use the declared
/// fundamental domain (exact for constant integrands); everything else gets
/// randomized quasi-Monte-Carlo with a batched standard error.
IntegralEstimate integrate(const Manifold& m, const PointScalar& f, int points,
                           std::uint64_t seed);

double manifold_volume(const Manifold& m);

/// Max norms of the four structure components over sampled points, and the
/// resulting class label.
struct Classification {
    double w1 = 0, w2 = 0, w3 = 0, w4 = 0;
    std::string label;
    bool integrable = false;
};
Classification classify(const Manifold& m, const SuiteConfig& cfg);

struct SignTheoremReport {
    std::string id;           // e.g. "thm5.1(1)"
    std::optional<double> t;
    bool applicable = false;
    std::string skip_reason;
    double integral = 0;        // closed-form integrand, integrated
    double integral_direct = 0; // the scalar-curvature route
    double agreement = 0;       // |integral - integral_direct|
    bool sign_ok = false;
    bool equality_case = false;
    std::string diagnosis; // conclusion string when the equality case is hit
    int samples = 0;
    std::string method;
};

std::vector<SignTheoremReport> sign_theorems(const Manifold& m, const SuiteConfig& cfg);

struct KGauduchonResult {
    int k = 0;
    double lhs_density = 0; // coefficient against dv, forms pipeline
    double rhs_density = 0; // torsion-norm closed form
    double residual = 0;
    double imag_residual = 0;
    double trace_df_residual = 0;   // intermediate pairing <i dF' ^ dF'', F^3>
    double trace_ddbar_residual = 0; // intermediate pairing <i d d'' F, F^2>
};

/// Pointwise density of the (k, n-k-1) pairing for an integrable member with
/// n >= 3 and k in [1, n-1].
KGauduchonResult kgauduchon(const FullPoint& fp, int k);

struct BismutKGReport {
    IntegralEstimate lhs;       // integral of s1(-1) - s2(-1)
    IntegralEstimate rhs;       // integral of |dF|^2 - |lee|^2
    double agreement = 0;
    bool gauduchon_metric = false; // delta lee == 0 at every sampled point
    bool equal_scalars = false;    // s1(-1) == s2(-1) pointwise
    std::vector<double> k_densities; // filled when both conditions hold
};

BismutKGReport bismut_kgauduchon_theorem(const Manifold& m, const SuiteConfig& cfg);

} // namespace ahg
