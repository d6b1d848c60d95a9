// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Runs the full grid (every catalog member, 100 seeded points).

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ahg/identities.hpp"
#include "ahg/report.hpp"

using namespace ahg;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, what.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

// per-sample pass: |lhs - rhs| < tol_abs or relative error < tol_rel
struct Check {
    double tol_abs, tol_rel;
    bool all_ok = true;
    double worst_abs = 0;
    int samples = 0;
    explicit Check(double ta, double tr = 0.0) : tol_abs(ta), tol_rel(tr) {}
    void track(double lhs, double rhs) {
        ++samples;
        double a = std::abs(lhs - rhs);
        double scale = std::max(std::abs(lhs), std::abs(rhs));
        double rel = scale > 0 ? a / scale : 0.0;
        worst_abs = std::max(worst_abs, a);
        if (!(a < tol_abs || (tol_rel > 0 && rel < tol_rel))) all_ok = false;
    }
    void track_res(double r) { track(r, 0.0); }
    bool ok() const { return all_ok && samples > 0; }
    std::string str() const {
        char buf[80];
        std::snprintf(buf, sizeof buf, "%d comparisons, worst abs %.3g", samples, worst_abs);
        return buf;
    }
};

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

int main() {
    const int kPoints = 100;
    const std::uint64_t kSeed = 20240817;
    SuiteConfig cfg;
    cfg.points = kPoints;
    cfg.seed = kSeed;

    Check c1(1e-8, 1e-6), c2(1e-8, 1e-6), c3(1e-8, 1e-6), c3_int(1e-10), c4(1e-9),
        c5(1e-8), c6(1e-7), c8_pointwise(1e-8);
    double c8_intermediates = 0;

    for (const auto& m : catalog()) {
        auto ts = default_t_values(m.n);
        auto pts = sample_points(m, kPoints, kSeed);
        for (int pi = 0; pi < int(pts.size()); ++pi) {
            FullPoint fp = analyze_full(m, pts[pi]);
            const NormBundle& nb = fp.g.nb;
            double s = fp.g.sp.s, sJ = fp.g.sp.s_J;

            // criterion 1: the family identities for s1, s2
            for (double t : ts) {
                auto sc = scalar_curvatures(kmix_at(fp.cc, t), m.n);
                c1.track(sc.s1, s1_closed_form(nb, s, t, m.n));
                c1.track(sc.s2, s2_closed_form(nb, s, t, m.n));
            }

            // criterion 2: t = 0 routes and the curvature split
            auto sc0 = scalar_curvatures(kmix_at(fp.cc, 0.0), m.n);
            auto [s1sj, s2sj] = lichnerowicz_scalars_sj(nb, s, sJ, m.n);
            c2.track(sc0.s1, s1_closed_form(nb, s, 0.0, m.n));
            c2.track(sc0.s2, s2_closed_form(nb, s, 0.0, m.n));
            c2.track(sc0.s1, s1sj);
            c2.track(sc0.s2, s2sj);
            c2.track_res(lichnerowicz_split_residual(fp.kf.k0, fp.g.R_coord, fp.g.sj, fp.g.nJ));

            // criterion 3: structure decomposition identities
            c3.track(nb.nsq_nablaF,
                     nb.nsq_dF + 0.25 * nb.nsq_N0 - 2.0 / 3.0 * nb.nsq_dF_minus);
            c3.track(nb.nsq_nablaF, nb.nsq_lee / (m.n - 1) + nb.nsq_dF0_plus +
                                        0.25 * nb.nsq_N0 + nb.nsq_dF_minus / 3.0);
            c3.track(s - sJ, 2.0 / 3.0 * nb.nsq_dF_minus - 0.25 * nb.nsq_N0 + nb.nsq_lee +
                                 2.0 * nb.delta_lee);
            c3.track(fp.g.sp.weyl_F, ((2.0 * m.n - 1) * sJ - s) / (2.0 * (2.0 * m.n - 1)));
            c3.track_res(nabla_f_from_df_n_residual(fp.g.nablaF_fr, fp.g.dec));
            c3.track_res(nabla_f_symmetry_residual(fp.g.nablaF_fr, m.n));
            c3.track_res(nabla_f_reconstruction_residual(fp.g.nablaF_fr, fp.g.dec));
            if (nb.nsq_N < 1e-14) c3_int.track(nb.nsq_nablaF, nb.nsq_dF);

            // criterion 4: torsion dictionary and the difference tensor
            {
                auto nuu = nijenhuis_unitary(fp.g.sj, fp.g.fr);
                double res = 0;
                for (std::size_t i = 0; i < nuu.size(); ++i)
                    res = std::max(res, std::abs(nuu[i] + 4.0 * fp.ct.anti[i]));
                c4.track_res(res);
                double holo2 = 0, anti2 = 0;
                std::complex<double> cross = 0;
                for (const auto& x : fp.ct.holo) holo2 += std::norm(x);
                for (const auto& x : fp.ct.anti) anti2 += std::norm(x);
                for (int i = 0; i < m.n; ++i)
                    for (int j = 0; j < m.n; ++j)
                        for (int k = 0; k < m.n; ++k)
                            cross += fp.ct.a(i, j, k) * std::conj(fp.ct.a(k, i, j));
                double lee2 = 0;
                for (int j = 0; j < m.n; ++j) {
                    std::complex<double> tr = 0;
                    for (int i = 0; i < m.n; ++i) tr += fp.ct.h(i, j, i);
                    lee2 += std::norm(tr);
                }
                c4.track_res(std::abs(nb.nsq_N - 16.0 * anti2));
                c4.track_res(std::abs(nb.nsq_lee - 2.0 * lee2));
                c4.track_res(std::abs(nb.nsq_dF_plus - holo2));
                c4.track_res(std::abs(nb.nsq_dF_minus - (anti2 + 2.0 * cross.real())));
                c4.track_res(
                    connection_difference_residual(fp.cf, fp.g.sj, fp.g.fr, fp.ct));
            }

            // criterion 5: first Chern form relations at 50 points
            if (pi < 50) {
                Form rho0 = rho1_at(fp.cc, 0.0).first;
                MatD Jv = values_of(fp.g.sj.J);
                Form rho1_1 = rho1_at(fp.cc, 1.0).first;
                for (double t : {-1.0, 0.0, 0.5, 1.0}) {
                    Form rhot = rho1_at(fp.cc, t).first;
                    c5.track_res(max_abs_diff(rhot, rho0 + fp.g.lp.ddeltaF * (t / 2.0)));
                    if (nb.nsq_N < 1e-14) {
                        Form lhs = (rhot + j_action(rhot, Jv)) * 0.5;
                        Form dd = fp.g.lp.ddeltaF;
                        Form rhs = rho1_1 + (dd + j_action(dd, Jv)) * ((t - 1.0) / 4.0);
                        c5.track_res(max_abs_diff(lhs, rhs));
                    }
                }
            }

            // criterion 6: pinned tables (first 10 points suffice)
            if (pi < 10) {
                auto expect = [&](const char* key, double computed) {
                    auto it = m.expected_scalars.find(key);
                    if (it != m.expected_scalars.end()) c6.track(computed, it->second);
                };
                expect("s", s);
                expect("s_J", sJ);
                expect("nsq_dF", nb.nsq_dF);
                expect("nsq_nablaF", nb.nsq_nablaF);
                expect("nsq_lee", nb.nsq_lee);
                expect("nsq_N0", nb.nsq_N0);
                expect("delta_lee", nb.delta_lee);
                auto scp = scalar_curvatures(kmix_at(fp.cc, 1.0), m.n);
                expect("s1@1", scp.s1);
                expect("s2@1", scp.s2);
                auto scm = scalar_curvatures(kmix_at(fp.cc, -1.0), m.n);
                expect("s1@-1", scm.s1);
                expect("s2@-1", scm.s2);
                if (m.name == "s6_nearly_kaehler")
                    for (double t : ts) {
                        auto sct = scalar_curvatures(kmix_at(fp.cc, t), 3);
                        c6.track(sct.s1, 0.0);
                        c6.track(sct.s2, 12.0);
                    }
                if (m.name == "iwasawa") {
                    auto d = scalar_curvatures(kmix_at(fp.cc, -1.0), 3);
                    c6.track(d.s1 - d.s2, 2.0);
                }
            }

            // criterion 8, pointwise part: the density identity on Hermitian
            // members with n >= 3
            if (m.n >= 3 && nb.nsq_N < 1e-14 && pi < 50) {
                for (int k = 1; k <= m.n - 1; ++k) {
                    KGauduchonResult r = kgauduchon(fp, k);
                    c8_pointwise.track(r.lhs_density, r.rhs_density);
                    c8_intermediates = std::max(
                        {c8_intermediates, r.trace_df_residual, r.trace_ddbar_residual});
                }
            }
        }
    }

    report(1, "family scalar curvatures: contraction equals closed form on the full grid",
           c1.ok(), c1.str());
    report(2, "first canonical connection scalars: all routes agree", c2.ok(), c2.str());
    report(3, "structure decomposition identities and norm rules", c3.ok() && c3_int.ok(),
           c3.str() + ", integrable |nabla F|^2 vs |dF|^2 " + g(c3_int.worst_abs));
    report(4, "torsion dictionary and connection difference tensor", c4.ok(), c4.str());
    report(5, "first Chern form family relations", c5.ok(), c5.str());
    report(6, "pinned scalar tables", c6.ok(), c6.str());

    // criterion 7: sign theorems with equality diagnoses
    {
        bool ok = true;
        std::string note;
        bool saw_lck = false, saw_hermitian_surface = false, saw_negative = false,
             saw_kahler = false;
        for (const auto& m : catalog()) {
            SuiteConfig scfg = cfg;
            scfg.points = 16;
            for (const auto& r : sign_theorems(m, scfg)) {
                if (!r.applicable) continue;
                if (!r.sign_ok) {
                    ok = false;
                    note += " sign violation " + m.name + ":" + r.id;
                }
                if (r.agreement > 1e-6) {
                    ok = false;
                    note += " route mismatch " + m.name + ":" + r.id;
                }
                if (m.name == "hopf_3" && r.id == "thm5.1(1)" && r.t &&
                    std::abs(*r.t - 0.75) < 1e-12 && r.equality_case &&
                    r.diagnosis == "locally conformally Kahler manifold")
                    saw_lck = true;
                if (m.name == "hopf_2" && r.id == "thm5.2(1)" && r.t &&
                    std::abs(*r.t - 0.5) < 1e-12 && r.equality_case &&
                    r.diagnosis == "Hermitian surface")
                    saw_hermitian_surface = true;
                if (m.name == "s6_nearly_kaehler" && r.id == "thm5.4(2)" &&
                    r.integral < -1.0)
                    saw_negative = true;
                if (m.name.rfind("flat_torus", 0) == 0 && r.equality_case &&
                    r.diagnosis == "Kahler manifold")
                    saw_kahler = true;
            }
        }
        if (!saw_lck) note += " missing LCK equality case";
        if (!saw_hermitian_surface) note += " missing Hermitian-surface equality case";
        if (!saw_negative) note += " missing negative-total case";
        if (!saw_kahler) note += " missing Kahler equality case";
        ok = ok && saw_lck && saw_hermitian_surface && saw_negative && saw_kahler;
        report(7, "sign theorems with equality-case diagnoses", ok,
               note.empty() ? "all class-matching members verified" : note);
    }

    // criterion 8: densities plus the integral identity
    {
        bool ok = c8_pointwise.ok() && c8_intermediates < 1e-8;
        std::string note = "pointwise " + g(c8_pointwise.worst_abs) + ", intermediates " +
                           g(c8_intermediates);
        const Manifold& iw = find_manifold("iwasawa");
        FullPoint fi = analyze_full(iw, sample_points(iw, 1, kSeed)[0]);
        double k1 = kgauduchon(fi, 1).lhs_density;
        double k2 = kgauduchon(fi, 2).lhs_density;
        if (std::abs(k1 - 1.0) > 1e-8 || std::abs(k2) > 1e-8) {
            ok = false;
            note += " iwasawa densities " + g(k1) + "," + g(k2);
        }
        SuiteConfig scfg = cfg;
        scfg.points = 16;
        for (const char* name : {"flat_torus_6", "iwasawa", "hopf_3"}) {
            auto rep = bismut_kgauduchon_theorem(find_manifold(name), scfg);
            double sigma = 0;
            if (rep.lhs.std_error) sigma += *rep.lhs.std_error * *rep.lhs.std_error;
            if (rep.rhs.std_error) sigma += *rep.rhs.std_error * *rep.rhs.std_error;
            double band = std::max(3.0 * std::sqrt(sigma), 1e-6);
            if (rep.agreement > band) {
                ok = false;
                note += std::string(" integral mismatch on ") + name;
            }
        }
        report(8, "density identities for the Gauduchon powers", ok, note);
    }

    // criterion 9: jets against the finite-difference oracle, shared stencils
    {
        double worst_rel = 0;
        const double h = 1e-4;
        for (const auto& m : catalog()) {
            const int d = m.dim();
            auto pts = sample_points(m, kPoints, kSeed ^ 0x99);
            for (const auto& p : pts) {
                StructureJets sj = m.eval(p, 2);
                auto eval_vals = [&](const std::vector<double>& x) {
                    StructureJets s = m.eval(x, 1);
                    std::pair<MatD, MatD> out{values_of(s.h), values_of(s.J)};
                    return out;
                };
                std::vector<double> x(p.coords);
                auto base = eval_vals(x);
                std::vector<std::pair<MatD, MatD>> plus(d), minus(d);
                for (int a = 0; a < d; ++a) {
                    x[a] += h;
                    plus[a] = eval_vals(x);
                    x[a] -= 2 * h;
                    minus[a] = eval_vals(x);
                    x[a] += h;
                }
                auto track = [&](double fd, double jet, double scale) {
                    double err = std::abs(fd - jet) / std::max(scale, 1.0);
                    worst_rel = std::max(worst_rel, err);
                };
                for (int a = 0; a < d; ++a)
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) {
                            double scale_h =
                                std::max(std::abs(sj.h(i, j).value), std::abs(sj.h(i, j).g(a)));
                            track((plus[a].first(i, j) - minus[a].first(i, j)) / (2 * h),
                                  sj.h(i, j).g(a), scale_h);
                            double scale_j =
                                std::max(std::abs(sj.J(i, j).value), std::abs(sj.J(i, j).g(a)));
                            track((plus[a].second(i, j) - minus[a].second(i, j)) / (2 * h),
                                  sj.J(i, j).g(a), scale_j);
                            // diagonal second derivatives from the same stencil
                            track((plus[a].first(i, j) - 2 * base.first(i, j) +
                                   minus[a].first(i, j)) /
                                      (h * h),
                                  sj.h(i, j).h(a, a), std::abs(sj.h(i, j).h(a, a)));
                            track((plus[a].second(i, j) - 2 * base.second(i, j) +
                                   minus[a].second(i, j)) /
                                      (h * h),
                                  sj.J(i, j).h(a, a), std::abs(sj.J(i, j).h(a, a)));
                        }
                // mixed second derivatives, four-point stencils
                for (int a = 0; a < d; ++a)
                    for (int b = a + 1; b < d; ++b) {
                        auto shift_eval = [&](double da, double db) {
                            std::vector<double> y(p.coords);
                            y[a] += da;
                            y[b] += db;
                            return eval_vals(y);
                        };
                        auto pp = shift_eval(h, h), pm = shift_eval(h, -h),
                             mp = shift_eval(-h, h), mm = shift_eval(-h, -h);
                        for (int i = 0; i < d; ++i)
                            for (int j = 0; j < d; ++j) {
                                double fd_h = (pp.first(i, j) - pm.first(i, j) -
                                               mp.first(i, j) + mm.first(i, j)) /
                                              (4 * h * h);
                                track(fd_h, sj.h(i, j).h(a, b), std::abs(sj.h(i, j).h(a, b)));
                                double fd_j = (pp.second(i, j) - pm.second(i, j) -
                                               mp.second(i, j) + mm.second(i, j)) /
                                              (4 * h * h);
                                track(fd_j, sj.J(i, j).h(a, b), std::abs(sj.J(i, j).h(a, b)));
                            }
                    }
            }
        }
        report(9, "jet derivatives match the finite-difference oracle",
               worst_rel < 1e-5, "worst rel " + g(worst_rel));
    }

    // criterion 10: byte-identical reports for identical config and seed
    {
        RunConfig rc;
        rc.manifold = "kodaira_thurston";
        rc.points = 3;
        rc.seed = 77;
        bool ok = render_report(rc, "verify") == render_report(rc, "verify");
        rc.manifold = "perturbed_torus";
        rc.points = 24;
        ok = ok && render_report(rc, "integrate", "volume") ==
                       render_report(rc, "integrate", "volume");
        rc.manifold = "s6_nearly_kaehler";
        rc.points = 2;
        ok = ok && render_report(rc, "scalars") == render_report(rc, "scalars");
        report(10, "determinism of reports", ok, ok ? "byte-identical" : "MISMATCH");
    }

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
