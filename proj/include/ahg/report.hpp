#pragma once

#include <iosfwd>

#include "ahg/identities.hpp"

namespace ahg {

struct RunConfig {
    std::string manifold;        // catalog name
    std::string spec_file;       // or a JSON manifold spec path
    int points = 100;
    std::uint64_t seed = 1;
    std::vector<double> t_values; // empty -> default set for the dimension
    double tol_abs = 1e-8;
    double tol_rel = 1e-6;
    double class_tol = 1e-12;
    std::string out_path;  // empty -> stdout
    std::string format = "json";

    SuiteConfig suite() const {
        SuiteConfig s;
        s.points = points;
        s.seed = seed;
        s.t_values = t_values;
        s.tol_abs = tol_abs;
        s.tol_rel = tol_rel;
        s.class_tol = class_tol;
        return s;
    }
};

/// Hash of docs/conventions.md, embedded at build time; reports carry it so
/// numbers are only compared across identical conventions.
std::string ledger_hash();

Manifold resolve_manifold(const RunConfig& cfg);

struct ScalarRow {
    int point_index = 0;
    std::vector<double> coords;
    double s = 0, s_J = 0, weyl_F = 0;
    NormBundle nb;
    // one entry per t: contraction and closed-form values
    std::vector<double> t;
    std::vector<double> s1_contract, s2_contract, s1_closed, s2_closed;
};

std::vector<ScalarRow> compute_scalars(const Manifold& m, const SuiteConfig& cfg);

struct IntegralRow {
    std::string name;
    std::optional<double> t;
    double value = 0;
    std::optional<double> std_error;
    int samples = 0;
    std::string method;
    std::optional<double> companion; // second route, when the row is a comparison
    std::string note;                // sign / equality-case info
};

/// Resolve an integrand by name ("thm5.1", "kgauduchon:k=2", "volume", or an
/// expression over the reported scalars) and integrate it.
std::vector<IntegralRow> run_integrands(const Manifold& m, const SuiteConfig& cfg,
                                        const std::string& integrand);

/// Names usable in integrand expressions.
const std::vector<std::string>& scalar_variable_names();

int cmd_list(std::ostream& out);
int cmd_verify(const RunConfig& cfg);
int cmd_scalars(const RunConfig& cfg);
int cmd_integrate(const RunConfig& cfg, const std::string& integrand);
int cmd_classify(const RunConfig& cfg);

/// Rendered report (JSON or CSV) for testing; `kind` in {verify, scalars,
/// integrate, classify}.
std::string render_report(const RunConfig& cfg, const std::string& kind,
                          const std::string& integrand = "");

} // namespace ahg
