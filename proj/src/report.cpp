#include "ahg/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ahg_ledger_hash.hpp"

namespace ahg {

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const RunConfig& cfg, const Manifold& m) {
    ordered_json j;
    j["manifold"] = m.name;
    if (!cfg.spec_file.empty()) j["spec_file"] = cfg.spec_file;
    j["points"] = cfg.points;
    j["seed"] = cfg.seed;
    j["t_values"] = cfg.t_values.empty() ? cli_default_t_values(m.n) : cfg.t_values;
    j["tol_abs"] = cfg.tol_abs;
    j["tol_rel"] = cfg.tol_rel;
    j["class_tol"] = cfg.class_tol;
    return j;
}

ordered_json result_json(const IdentityResult& r) {
    ordered_json j;
    j["identity"] = r.identity_id;
    j["point"] = r.point_index;
    if (r.t) j["t"] = *r.t;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["pass"] = r.pass;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

ordered_json norms_json(const NormBundle& nb) {
    ordered_json j;
    j["nsq_dF_minus"] = nb.nsq_dF_minus;
    j["nsq_N0"] = nb.nsq_N0;
    j["nsq_dF0_plus"] = nb.nsq_dF0_plus;
    j["nsq_lee"] = nb.nsq_lee;
    j["nsq_dF"] = nb.nsq_dF;
    j["nsq_dF_plus"] = nb.nsq_dF_plus;
    j["nsq_nablaF"] = nb.nsq_nablaF;
    j["nsq_N"] = nb.nsq_N;
    j["delta_lee"] = nb.delta_lee;
    return j;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw DomainError("cannot write output file: " + cfg.out_path);
    out << text;
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string ledger_hash() { return kLedgerHash; }

Manifold resolve_manifold(const RunConfig& cfg) {
    if (cfg.points < 1) throw DomainError("points must be at least 1");
    if (!(cfg.tol_abs > 0) || !(cfg.tol_rel > 0) || !(cfg.class_tol > 0))
        throw DomainError("tolerances must be positive");
    if (!cfg.spec_file.empty()) return load_manifold_json(cfg.spec_file);
    if (cfg.manifold.empty()) throw DomainError("no manifold selected");
    return find_manifold(cfg.manifold);
}

std::vector<ScalarRow> compute_scalars(const Manifold& m, const SuiteConfig& cfg) {
    auto ts = cfg.t_values.empty() ? default_t_values(m.n) : cfg.t_values;
    auto pts = sample_points(m, cfg.points, cfg.seed);
    std::vector<ScalarRow> rows;
    rows.reserve(pts.size());
    for (int i = 0; i < int(pts.size()); ++i) {
        FullPoint fp = analyze_full(m, pts[i]);
        ScalarRow r;
        r.point_index = i;
        r.coords = pts[i].coords;
        r.s = fp.g.sp.s;
        r.s_J = fp.g.sp.s_J;
        r.weyl_F = fp.g.sp.weyl_F;
        r.nb = fp.g.nb;
        for (double t : ts) {
            auto sc = scalar_curvatures(kmix_at(fp.cc, t), m.n);
            r.t.push_back(t);
            r.s1_contract.push_back(sc.s1);
            r.s2_contract.push_back(sc.s2);
            r.s1_closed.push_back(s1_closed_form(fp.g.nb, fp.g.sp.s, t, m.n));
            r.s2_closed.push_back(s2_closed_form(fp.g.nb, fp.g.sp.s, t, m.n));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<std::string>& scalar_variable_names() {
    static const std::vector<std::string> names = {
        "s",          "s_J",        "weyl_F",     "nsq_dF_minus", "nsq_N0",
        "nsq_dF0_plus", "nsq_lee",  "nsq_dF",     "nsq_dF_plus",  "nsq_nablaF",
        "nsq_N",      "delta_lee",  "s1",         "s2"};
    return names;
}

namespace {

double scalar_variable(const FullPoint& fp, int idx, double t, int n) {
    switch (idx) {
        case 0: return fp.g.sp.s;
        case 1: return fp.g.sp.s_J;
        case 2: return fp.g.sp.weyl_F;
        case 3: return fp.g.nb.nsq_dF_minus;
        case 4: return fp.g.nb.nsq_N0;
        case 5: return fp.g.nb.nsq_dF0_plus;
        case 6: return fp.g.nb.nsq_lee;
        case 7: return fp.g.nb.nsq_dF;
        case 8: return fp.g.nb.nsq_dF_plus;
        case 9: return fp.g.nb.nsq_nablaF;
        case 10: return fp.g.nb.nsq_N;
        case 11: return fp.g.nb.delta_lee;
        case 12: return scalar_curvatures(kmix_at(fp.cc, t), n).s1;
        case 13: return scalar_curvatures(kmix_at(fp.cc, t), n).s2;
    }
    throw DomainError("unknown scalar variable");
}

} // namespace

std::vector<IntegralRow> run_integrands(const Manifold& m, const SuiteConfig& cfg,
                                        const std::string& integrand) {
    std::vector<IntegralRow> rows;
    auto push_estimate = [&](std::string name, std::optional<double> t,
                             const IntegralEstimate& est, std::optional<double> companion,
                             std::string note) {
        IntegralRow r;
        r.name = std::move(name);
        r.t = t;
        r.value = est.value;
        r.std_error = est.std_error;
        r.samples = est.samples;
        r.method = est.method;
        r.companion = companion;
        r.note = std::move(note);
        rows.push_back(std::move(r));
    };

    if (integrand.rfind("thm", 0) == 0 && integrand != "thm5.8") {
        auto reports = sign_theorems(m, cfg);
        bool any = false;
        for (const auto& r : reports) {
            if (r.id.rfind(integrand, 0) != 0) continue;
            any = true;
            IntegralRow row;
            row.name = r.id;
            row.t = r.t;
            if (!r.applicable) {
                row.method = "skipped";
                row.note = r.skip_reason;
            } else {
                row.value = r.integral;
                row.companion = r.integral_direct;
                row.samples = r.samples;
                row.method = r.method;
                row.note = std::string(r.sign_ok ? "sign ok" : "SIGN VIOLATION");
                if (r.equality_case)
                    row.note += "; equality case" +
                                (r.diagnosis.empty() ? "" : ": " + r.diagnosis);
            }
            rows.push_back(std::move(row));
        }
        if (!any) throw DomainError("no such sign theorem: " + integrand);
        return rows;
    }
    if (integrand == "thm5.8") {
        auto rep = bismut_kgauduchon_theorem(m, cfg);
        push_estimate("thm5.8:bismut-difference", std::nullopt, rep.lhs, rep.rhs.value,
                      rep.agreement < 1e-6 ? "two routes agree" : "ROUTE MISMATCH");
        std::string note = rep.gauduchon_metric && rep.equal_scalars
                               ? "k-Gauduchon densities vanish"
                               : "k-Gauduchon conclusion not triggered";
        push_estimate("thm5.8:norm-difference", std::nullopt, rep.rhs, rep.lhs.value, note);
        return rows;
    }
    if (integrand.rfind("kgauduchon", 0) == 0) {
        int k = 1;
        auto pos = integrand.find("k=");
        if (pos != std::string::npos) k = std::stoi(integrand.substr(pos + 2));
        auto lhs = integrate(
            m, [k](const FullPoint& fp) { return kgauduchon(fp, k).lhs_density; },
            cfg.points, cfg.seed);
        auto rhs = integrate(
            m, [k](const FullPoint& fp) { return kgauduchon(fp, k).rhs_density; },
            cfg.points, cfg.seed);
        push_estimate("kgauduchon:k=" + std::to_string(k) + ":forms", double(k), lhs,
                      rhs.value, "");
        push_estimate("kgauduchon:k=" + std::to_string(k) + ":norms", double(k), rhs,
                      lhs.value, "");
        return rows;
    }
    if (integrand == "volume" || integrand == "1") {
        auto est = integrate(m, [](const FullPoint&) { return 1.0; }, cfg.points, cfg.seed);
        push_estimate("volume", std::nullopt, est, std::nullopt, "");
        return rows;
    }

    // expression over reported scalars; s1/s2 refer to each configured t
    ExprAst ast = parse_expr(integrand, scalar_variable_names());
    bool uses_t = false;
    for (const auto& node : ast.nodes)
        if (node.kind == ExprAst::Kind::Coordinate && node.coord >= 12) uses_t = true;
    auto ts = cfg.t_values.empty() ? default_t_values(m.n) : cfg.t_values;
    if (!uses_t) ts = {0.0};
    for (double t : ts) {
        auto est = integrate(
            m,
            [&](const FullPoint& fp) {
                std::vector<Jet> args;
                args.reserve(scalar_variable_names().size());
                for (int i = 0; i < int(scalar_variable_names().size()); ++i)
                    args.push_back(jet_const(1, 1, scalar_variable(fp, i, t, m.n)));
                return eval_expr(ast, args).value;
            },
            cfg.points, cfg.seed);
        push_estimate(integrand, uses_t ? std::optional<double>(t) : std::nullopt, est,
                      std::nullopt, "");
    }
    return rows;
}

namespace {

ordered_json integral_json(const IntegralRow& r) {
    ordered_json j;
    j["name"] = r.name;
    if (r.t) j["t"] = *r.t;
    j["value"] = r.value;
    if (r.std_error) j["std_error"] = *r.std_error;
    j["samples"] = r.samples;
    j["method"] = r.method;
    if (r.companion) j["companion"] = *r.companion;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

struct ReportPayload {
    std::vector<IdentityResult> results;
    std::vector<ScalarRow> scalars;
    std::vector<IntegralRow> integrals;
    std::optional<Classification> cls;
};

std::string render_json(const RunConfig& cfg, const Manifold& m, const ReportPayload& p) {
    ordered_json j;
    j["manifold"] = m.name;
    j["config"] = config_json(cfg, m);
    if (!p.results.empty() || true) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : p.results) arr.push_back(result_json(r));
        j["results"] = arr;
    }
    {
        ordered_json arr = ordered_json::array();
        for (const auto& s : p.scalars) {
            ordered_json row;
            row["point"] = s.point_index;
            row["coords"] = s.coords;
            row["s"] = s.s;
            row["s_J"] = s.s_J;
            row["weyl_F"] = s.weyl_F;
            row["norms"] = norms_json(s.nb);
            ordered_json fam = ordered_json::array();
            for (std::size_t i = 0; i < s.t.size(); ++i) {
                ordered_json f;
                f["t"] = s.t[i];
                f["s1"] = s.s1_contract[i];
                f["s2"] = s.s2_contract[i];
                f["s1_closed"] = s.s1_closed[i];
                f["s2_closed"] = s.s2_closed[i];
                fam.push_back(f);
            }
            row["family"] = fam;
            arr.push_back(row);
        }
        j["scalars"] = arr;
    }
    {
        ordered_json arr = ordered_json::array();
        for (const auto& r : p.integrals) arr.push_back(integral_json(r));
        j["integrals"] = arr;
    }
    if (p.cls) {
        ordered_json c;
        c["label"] = p.cls->label;
        c["integrable"] = p.cls->integrable;
        c["max_nsq_dF_minus"] = p.cls->w1;
        c["max_nsq_N0"] = p.cls->w2;
        c["max_nsq_dF0_plus"] = p.cls->w3;
        c["max_nsq_lee"] = p.cls->w4;
        j["classification"] = c;
    }
    j["ledger_hash"] = ledger_hash();
    return j.dump(2) + "\n";
}

std::string render_csv(const Manifold& m, const ReportPayload& p) {
    std::ostringstream out;
    if (!p.results.empty()) {
        out << "manifold,identity,point,t,lhs,rhs,abs_err,rel_err,pass\n";
        for (const auto& r : p.results) {
            out << csv_escape(m.name) << ',' << csv_escape(r.identity_id) << ','
                << r.point_index << ',' << (r.t ? fmt(*r.t) : "") << ',' << fmt(r.lhs) << ','
                << fmt(r.rhs) << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ','
                << (r.pass ? "1" : "0") << '\n';
        }
    }
    if (!p.scalars.empty()) {
        out << "manifold,point,t,s,s_J,s1,s2,s1_closed,s2_closed,nsq_dF,nsq_lee,nsq_N0,"
               "nsq_dF_minus,nsq_dF0_plus,nsq_nablaF,delta_lee\n";
        for (const auto& s : p.scalars)
            for (std::size_t i = 0; i < s.t.size(); ++i)
                out << csv_escape(m.name) << ',' << s.point_index << ',' << fmt(s.t[i]) << ','
                    << fmt(s.s) << ',' << fmt(s.s_J) << ',' << fmt(s.s1_contract[i]) << ','
                    << fmt(s.s2_contract[i]) << ',' << fmt(s.s1_closed[i]) << ','
                    << fmt(s.s2_closed[i]) << ',' << fmt(s.nb.nsq_dF) << ','
                    << fmt(s.nb.nsq_lee) << ',' << fmt(s.nb.nsq_N0) << ','
                    << fmt(s.nb.nsq_dF_minus) << ',' << fmt(s.nb.nsq_dF0_plus) << ','
                    << fmt(s.nb.nsq_nablaF) << ',' << fmt(s.nb.delta_lee) << '\n';
    }
    if (!p.integrals.empty()) {
        out << "manifold,name,t,value,std_error,samples,method,companion,note\n";
        for (const auto& r : p.integrals)
            out << csv_escape(m.name) << ',' << csv_escape(r.name) << ','
                << (r.t ? fmt(*r.t) : "") << ',' << fmt(r.value) << ','
                << (r.std_error ? fmt(*r.std_error) : "") << ',' << r.samples << ','
                << r.method << ',' << (r.companion ? fmt(*r.companion) : "") << ','
                << csv_escape(r.note) << '\n';
    }
    if (p.cls) {
        out << "manifold,label,integrable,max_nsq_dF_minus,max_nsq_N0,max_nsq_dF0_plus,"
               "max_nsq_lee\n";
        out << csv_escape(m.name) << ',' << p.cls->label << ','
            << (p.cls->integrable ? "1" : "0") << ',' << fmt(p.cls->w1) << ','
            << fmt(p.cls->w2) << ',' << fmt(p.cls->w3) << ',' << fmt(p.cls->w4) << '\n';
    }
    return out.str();
}

std::string render_payload(const RunConfig& cfg, const Manifold& m, const ReportPayload& p) {
    if (cfg.format == "csv") return render_csv(m, p);
    if (cfg.format != "json") throw DomainError("unknown format: " + cfg.format);
    return render_json(cfg, m, p);
}

} // namespace

std::string render_report(const RunConfig& cfg_in, const std::string& kind,
                          const std::string& integrand) {
    RunConfig cfg = cfg_in;
    Manifold m = resolve_manifold(cfg);
    if (cfg.t_values.empty()) cfg.t_values = cli_default_t_values(m.n);
    ReportPayload p;
    if (kind == "verify") {
        p.results = run_pointwise_suite(m, cfg.suite());
    } else if (kind == "scalars") {
        p.scalars = compute_scalars(m, cfg.suite());
    } else if (kind == "integrate") {
        p.integrals = run_integrands(m, cfg.suite(), integrand);
    } else if (kind == "classify") {
        p.cls = classify(m, cfg.suite());
    } else {
        throw DomainError("unknown report kind: " + kind);
    }
    return render_payload(cfg, m, p);
}

int cmd_list(std::ostream& out) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : catalog()) {
        ordered_json j;
        j["name"] = m.name;
        j["dim"] = 2 * m.n;
        j["class"] = m.expected_class;
        j["exportable"] = m.exportable;
        arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    Manifold m = resolve_manifold(cfg);
    if (cfg.t_values.empty()) cfg.t_values = cli_default_t_values(m.n);
    ReportPayload p;
    p.results = run_pointwise_suite(m, cfg.suite());
    write_output(cfg, render_payload(cfg, m, p));
    for (const auto& r : p.results)
        if (!r.pass) return 1;
    return 0;
}

int cmd_scalars(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    Manifold m = resolve_manifold(cfg);
    if (cfg.t_values.empty()) cfg.t_values = cli_default_t_values(m.n);
    ReportPayload p;
    p.scalars = compute_scalars(m, cfg.suite());
    write_output(cfg, render_payload(cfg, m, p));
    return 0;
}

int cmd_integrate(const RunConfig& cfg_in, const std::string& integrand) {
    RunConfig cfg = cfg_in;
    Manifold m = resolve_manifold(cfg);
    if (cfg.t_values.empty()) cfg.t_values = cli_default_t_values(m.n);
    ReportPayload p;
    p.integrals = run_integrands(m, cfg.suite(), integrand);
    write_output(cfg, render_payload(cfg, m, p));
    for (const auto& r : p.integrals)
        if (r.note.find("VIOLATION") != std::string::npos ||
            r.note.find("MISMATCH") != std::string::npos)
            return 1;
    return 0;
}

int cmd_classify(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    Manifold m = resolve_manifold(cfg);
    if (cfg.t_values.empty()) cfg.t_values = cli_default_t_values(m.n);
    ReportPayload p;
    p.cls = classify(m, cfg.suite());
    write_output(cfg, render_payload(cfg, m, p));
    return 0;
}

} // namespace ahg
