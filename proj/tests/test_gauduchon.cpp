#include <doctest.h>

#include <cmath>

#include "ahg/gauduchon.hpp"

using namespace ahg;

namespace {

const double kTset[] = {-1.0, -0.5, 0.0, 1.0 / 3.0, 0.5, 1.0, 2.0};

} // namespace

TEST_SUITE_BEGIN("gauduchon");

TEST_CASE("flat torus: the whole family is the flat connection") {
    const Manifold& m = find_manifold("flat_torus_4");
    FullPoint fp = analyze_full(m, sample_points(m, 1, 101)[0]);
    for (const auto& j : fp.cf.base) CHECK(std::abs(j.value) < 1e-14);
    for (const auto& j : fp.cf.corr) CHECK(std::abs(j.value) < 1e-14);
    for (double t : kTset) {
        auto sc = scalar_curvatures(kmix_at(fp.cc, t), 2);
        CHECK(std::abs(sc.s1) < 1e-13);
        CHECK(std::abs(sc.s2) < 1e-13);
    }
}

TEST_CASE("the family preserves both the metric and J at every tested t") {
    for (const auto& m : catalog()) {
        FullPoint fp = analyze_full(m, sample_points(m, 1, 103)[0]);
        for (double t : kTset) {
            CHECK(connection_metric_residual(fp.cf, fp.g.mj, t) < 1e-9);
            CHECK(connection_j_residual(fp.cf, fp.g.sj, t) < 1e-9);
        }
    }
}

TEST_CASE("t = 0 curvature splits into the J-symmetrized Riemann part") {
    for (const char* name : {"hopf_2", "kodaira_thurston", "s6_nearly_kaehler",
                             "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 107)[0]);
        CHECK(lichnerowicz_split_residual(fp.kf.k0, fp.g.R_coord, fp.g.sj, fp.g.nJ) < 1e-8);
    }
}

TEST_CASE("Chern torsion has no (1,1) block") {
    for (const auto& m : catalog()) {
        FullPoint fp = analyze_full(m, sample_points(m, 1, 109)[0]);
        CHECK(fp.ct.mixed_residual < 1e-9);
    }
}

TEST_CASE("Iwasawa is Chern flat with the expected torsion") {
    const Manifold& m = find_manifold("iwasawa");
    FullPoint fp = analyze_full(m, sample_points(m, 1, 113)[0]);
    T4 k1 = curvature_at(fp.kf, 1.0);
    CHECK(max_abs(k1) < 1e-8);
    // gauge-invariant contractions
    double holo2 = 0, anti2 = 0;
    for (const auto& x : fp.ct.holo) holo2 += std::norm(x);
    for (const auto& x : fp.ct.anti) anti2 += std::norm(x);
    CHECK(holo2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(anti2 < 1e-18);
    for (int j = 0; j < 3; ++j) {
        std::complex<double> tr = 0;
        for (int i = 0; i < 3; ++i) tr += fp.ct.h(i, j, i);
        CHECK(std::abs(tr) < 1e-9); // balanced: zero torsion trace
    }
    // at the origin of the chart the frame is the invariant one
    ChartPoint origin;
    origin.coords.assign(6, 0.0);
    FullPoint f0 = analyze_full(m, origin);
    CHECK(std::abs(f0.ct.h(2, 0, 1) - std::complex<double>(-1.0, 0.0)) < 1e-10);
    CHECK(std::abs(f0.ct.h(2, 1, 0) - std::complex<double>(1.0, 0.0)) < 1e-10);
}

TEST_CASE("Nijenhuis components are -4 times the antiholomorphic torsion") {
    for (const char* name : {"kodaira_thurston", "s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 127)[0]);
        auto nuu = nijenhuis_unitary(fp.g.sj, fp.g.fr);
        double res = 0;
        for (std::size_t i = 0; i < nuu.size(); ++i)
            res = std::max(res, std::abs(nuu[i] + 4.0 * fp.ct.anti[i]));
        CHECK(res < 1e-9);
    }
}

TEST_CASE("torsion norm dictionary") {
    for (const char* name : {"hopf_2", "hopf_3", "iwasawa", "kodaira_thurston",
                             "kodaira_thurston_cplx", "s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 131)[0]);
        const int n = m.n;
        double holo2 = 0, anti2 = 0;
        for (const auto& x : fp.ct.holo) holo2 += std::norm(x);
        for (const auto& x : fp.ct.anti) anti2 += std::norm(x);
        // |N|^2 = 16 sum |T anti|^2
        CHECK(std::abs(fp.g.nb.nsq_N - 16.0 * anti2) < 1e-9);
        // |lee|^2 = 2 sum_j |sum_i T^i_{ji}|^2
        double lee2 = 0;
        for (int j = 0; j < n; ++j) {
            std::complex<double> tr = 0;
            for (int i = 0; i < n; ++i) tr += fp.ct.h(i, j, i);
            lee2 += std::norm(tr);
        }
        CHECK(std::abs(fp.g.nb.nsq_lee - 2.0 * lee2) < 1e-9);
        // |(dF)^+|^2 = sum |T holo|^2
        CHECK(std::abs(fp.g.nb.nsq_dF_plus - holo2) < 1e-9);
        // |(dF)^-|^2 = sum |T anti|^2 + 2 Re sum T^i_{jbar kbar} conj(T^k_{ibar jbar})
        std::complex<double> cross = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) cross += fp.ct.a(i, j, k) * std::conj(fp.ct.a(k, i, j));
        CHECK(std::abs(fp.g.nb.nsq_dF_minus - (anti2 + 2.0 * cross.real())) < 1e-9);
        // |T|^2 = both blocks together
        CHECK(std::abs((holo2 + anti2) -
                       (fp.g.nb.nsq_dF_plus + fp.g.nb.nsq_dF_minus - 2.0 * cross.real())) <
              1e-9);
    }
}

TEST_CASE("skew part of dF against the antiholomorphic torsion") {
    for (const char* name : {"s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 137)[0]);
        const int n = m.n;
        CForm wminus = to_unitary(fp.g.dec.dF_minus, n);
        const std::complex<double> I(0, 1);
        double res = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int idx[3] = {n + a, n + b, n + c};
                    std::complex<double> expect =
                        I * (fp.ct.a(c, a, b) + fp.ct.a(a, b, c) + fp.ct.a(b, c, a));
                    res = std::max(res, std::abs(wminus.get(idx) - expect));
                }
        CHECK(res < 1e-9);
    }
}

TEST_CASE("difference tensor between the ends of the family") {
    for (const char* name : {"hopf_2", "iwasawa", "kodaira_thurston", "s6_nearly_kaehler",
                             "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 139)[0]);
        CHECK(connection_difference_residual(fp.cf, fp.g.sj, fp.g.fr, fp.ct) < 1e-9);
    }
}

TEST_CASE("two Hermitian scalar curvatures: contraction equals the closed form") {
    for (const auto& m : catalog()) {
        auto pts = sample_points(m, 2, 149);
        for (const auto& p : pts) {
            FullPoint fp = analyze_full(m, p);
            std::vector<double> ts(std::begin(kTset), std::end(kTset));
            ts.push_back(1.0 - 1.0 / (2.0 * (m.n - 1)));
            for (double t : ts) {
                auto sc = scalar_curvatures(kmix_at(fp.cc, t), m.n);
                CHECK(sc.imag_residual < 1e-9);
                double c1 = s1_closed_form(fp.g.nb, fp.g.sp.s, t, m.n);
                double c2 = s2_closed_form(fp.g.nb, fp.g.sp.s, t, m.n);
                CHECK(std::abs(sc.s1 - c1) < 1e-8);
                CHECK(std::abs(sc.s2 - c2) < 1e-8);
            }
        }
    }
}

TEST_CASE("t = 0 scalars through both scalar-curvature routes") {
    for (const auto& m : catalog()) {
        FullPoint fp = analyze_full(m, sample_points(m, 1, 151)[0]);
        auto sc0 = scalar_curvatures(kmix_at(fp.cc, 0.0), m.n);
        auto [s1_sj, s2_sj] = lichnerowicz_scalars_sj(fp.g.nb, fp.g.sp.s, fp.g.sp.s_J, m.n);
        CHECK(std::abs(sc0.s1 - s1_sj) < 1e-8);
        CHECK(std::abs(sc0.s2 - s2_sj) < 1e-8);
        CHECK(std::abs(sc0.s1 - s1_closed_form(fp.g.nb, fp.g.sp.s, 0.0, m.n)) < 1e-8);
        CHECK(std::abs(sc0.s2 - s2_closed_form(fp.g.nb, fp.g.sp.s, 0.0, m.n)) < 1e-8);
        // family shifts away from t = 0
        for (double t : kTset) {
            auto sct = scalar_curvatures(kmix_at(fp.cc, t), m.n);
            CHECK(std::abs(sct.s1 - s1_shift(sc0.s1, fp.g.nb, t)) < 1e-8);
            CHECK(std::abs(sct.s2 - s2_shift(sc0.s2, fp.g.nb, t)) < 1e-8);
        }
    }
}

TEST_CASE("integrable and surface specializations of the closed forms") {
    for (const char* name : {"hopf_2", "hopf_3", "iwasawa", "kodaira_thurston_cplx"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 157)[0]);
        for (double t : kTset) {
            CHECK(std::abs(s1_closed_form(fp.g.nb, fp.g.sp.s, t, m.n) -
                           s1_hermitian_closed(fp.g.nb, fp.g.sp.s, t)) < 1e-9);
            CHECK(std::abs(s2_closed_form(fp.g.nb, fp.g.sp.s, t, m.n) -
                           s2_hermitian_closed(fp.g.nb, fp.g.sp.s, t)) < 1e-9);
        }
    }
    for (const char* name : {"hopf_2", "kodaira_thurston", "kodaira_thurston_cplx"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 163)[0]);
        for (double t : kTset) {
            CHECK(std::abs(s1_closed_form(fp.g.nb, fp.g.sp.s, t, 2) -
                           s1_surface_closed(fp.g.nb, fp.g.sp.s, t)) < 1e-9);
            CHECK(std::abs(s2_closed_form(fp.g.nb, fp.g.sp.s, t, 2) -
                           s2_surface_closed(fp.g.nb, fp.g.sp.s, t)) < 1e-9);
        }
    }
}

TEST_CASE("pinned scalar values along the family") {
    const Manifold& s6 = find_manifold("s6_nearly_kaehler");
    FullPoint fp = analyze_full(s6, sample_points(s6, 1, 167)[0]);
    for (double t : kTset) {
        auto sc = scalar_curvatures(kmix_at(fp.cc, t), 3);
        CHECK(sc.s1 == doctest::Approx(0.0).epsilon(1e-8));
        CHECK(sc.s2 == doctest::Approx(12.0).epsilon(1e-8));
    }
    const Manifold& iw = find_manifold("iwasawa");
    FullPoint fi = analyze_full(iw, sample_points(iw, 1, 167)[0]);
    auto sc1 = scalar_curvatures(kmix_at(fi.cc, 1.0), 3);
    CHECK(std::abs(sc1.s1) < 1e-9);
    CHECK(std::abs(sc1.s2) < 1e-9);
    auto scm1 = scalar_curvatures(kmix_at(fi.cc, -1.0), 3);
    CHECK(scm1.s1 - scm1.s2 == doctest::Approx(2.0).epsilon(1e-8));
    const Manifold& h2 = find_manifold("hopf_2");
    FullPoint fh = analyze_full(h2, sample_points(h2, 1, 167)[0]);
    auto sch = scalar_curvatures(kmix_at(fh.cc, 1.0), 2);
    CHECK(sch.s1 == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(sch.s2 == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("scalar differences at the Bismut and Chern parameters") {
    for (const char* name : {"hopf_2", "hopf_3", "iwasawa", "kodaira_thurston_cplx",
                             "flat_torus_4"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 173)[0]);
        auto scm = scalar_curvatures(kmix_at(fp.cc, -1.0), m.n);
        CHECK(std::abs((scm.s1 - scm.s2) - bismut_difference(fp.g.nb)) < 1e-8);
        auto scp = scalar_curvatures(kmix_at(fp.cc, 1.0), m.n);
        CHECK(std::abs((scp.s1 - scp.s2) - chern_difference(fp.g.nb)) < 1e-8);
    }
}

TEST_CASE("first Chern form: reality, family shift, flat cases") {
    for (const auto& m : catalog()) {
        FullPoint fp = analyze_full(m, sample_points(m, 1, 179)[0]);
        auto [rho0, imag0] = rho1_at(fp.cc, 0.0);
        CHECK(imag0 < 1e-9);
        for (double t : {-1.0, 0.0, 0.5, 1.0}) {
            auto [rhot, imagt] = rho1_at(fp.cc, t);
            CHECK(imagt < 1e-9);
            Form shift = rho0 + fp.g.lp.ddeltaF * (t / 2.0);
            CHECK(max_abs_diff(rhot, shift) < 1e-8);
        }
    }
    const Manifold& ft = find_manifold("flat_torus_4");
    FullPoint f0 = analyze_full(ft, sample_points(ft, 1, 179)[0]);
    CHECK(max_abs(rho1_at(f0.cc, 0.7).first) < 1e-12);
    const Manifold& iw = find_manifold("iwasawa");
    FullPoint fi = analyze_full(iw, sample_points(iw, 1, 179)[0]);
    CHECK(max_abs(rho1_at(fi.cc, 1.0).first) < 1e-8);
}

TEST_CASE("first Chern form at t = 0 equals the J-Ricci form plus the torsion correction") {
    for (const char* name : {"hopf_2", "kodaira_thurston", "s6_nearly_kaehler",
                             "perturbed_torus", "iwasawa"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 181)[0]);
        Form rho0_fr = to_frame(rho1_at(fp.cc, 0.0).first, fp.g.fr);
        Form corr = to_frame(rho1_zero_correction(fp.g.sj, fp.g.nJ, fp.g.mj), fp.g.fr);
        Form expected = fp.g.rho_j + corr;
        CHECK(max_abs_diff(rho0_fr, expected) < 1e-8);
    }
}

TEST_CASE("(1,1) part of the first Chern form on integrable members") {
    for (const char* name : {"hopf_2", "hopf_3", "iwasawa", "kodaira_thurston_cplx"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 191)[0]);
        MatD Jv = values_of(fp.g.sj.J);
        Form rho1_1 = rho1_at(fp.cc, 1.0).first;
        for (double t : {-1.0, 0.0, 0.5, 1.0}) {
            Form rhot = rho1_at(fp.cc, t).first;
            Form lhs = (rhot + j_action(rhot, Jv)) * 0.5;
            Form dd = fp.g.lp.ddeltaF;
            Form rhs = rho1_1 + (dd + j_action(dd, Jv)) * ((t - 1.0) / 4.0);
            CHECK(max_abs_diff(lhs, rhs) < 1e-8);
        }
    }
}

TEST_CASE("Ricci form traces recover the scalar curvatures") {
    for (const char* name : {"s6_nearly_kaehler", "hopf_2", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        FullPoint fp = analyze_full(m, sample_points(m, 1, 193)[0]);
        for (double t : {-1.0, 0.5, 1.0}) {
            auto kmix = kmix_at(fp.cc, t);
            auto sc = scalar_curvatures(kmix, m.n);
            RicciForms rf = ricci_forms(kmix, m.n);
            std::complex<double> tr1 = 0, tr3 = 0;
            for (int i = 0; i < m.n; ++i) {
                tr1 += rf.r1(i, i);
                tr3 += rf.r3(i, i);
            }
            CHECK(std::abs(tr1 - sc.s1) < 1e-9);
            CHECK(std::abs(tr3 - sc.s2) < 1e-9);
            // as real 2-forms, the F-pairing recovers the same traces
            Form rho1f = ricci_form_to_frame(rf.r1, m.n);
            Form rho3f = ricci_form_to_frame(rf.r3, m.n);
            CHECK(inner(rho1f, fp.g.dec.F) == doctest::Approx(sc.s1).epsilon(1e-8));
            CHECK(inner(rho3f, fp.g.dec.F) == doctest::Approx(sc.s2).epsilon(1e-8));
        }
    }
    const Manifold& iw = find_manifold("iwasawa");
    FullPoint fi = analyze_full(iw, sample_points(iw, 1, 197)[0]);
    RicciForms rf = ricci_forms(kmix_at(fi.cc, 1.0), 3);
    for (const MatC* r : {&rf.r1, &rf.r2, &rf.r3, &rf.r4})
        for (const auto& x : r->a) CHECK(std::abs(x) < 1e-8);
}

TEST_SUITE_END();
