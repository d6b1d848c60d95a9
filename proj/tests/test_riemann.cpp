#include <doctest.h>

#include <cmath>

#include "ahg/geometry.hpp"

using namespace ahg;

TEST_SUITE_BEGIN("riemann");

TEST_CASE("flat torus: everything vanishes") {
    const Manifold& m = find_manifold("flat_torus_4");
    PointGeometry g = analyze_point(m, sample_points(m, 1, 3)[0]);
    for (const auto& j : g.gamma.g) CHECK(std::abs(j.value) < 1e-14);
    CHECK(max_abs(g.R_fr) < 1e-14);
    CHECK(g.sp.s == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g.sp.s_J == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(g.sp.weyl_F) < 1e-13);
}

TEST_CASE("conformal chart Christoffel symbols match the closed form") {
    const Manifold& m = find_manifold("s6_nearly_kaehler");
    auto pts = sample_points(m, 2, 17);
    for (const auto& p : pts) {
        StructureJets sj = m.eval(p, 2);
        MetricJets mj = make_metric_jets(sj.h, chart_orientation(sj));
        Christoffel G = christoffel(mj);
        CHECK(metric_compat_residual(mj, G) < 1e-10);
        // h = e^{2f} delta with f = log(2/(1+r^2))
        double r2 = 0;
        for (double x : p.coords) r2 += x * x;
        std::vector<double> df(6);
        for (int a = 0; a < 6; ++a) df[a] = -2.0 * p.coords[a] / (1.0 + r2);
        for (int c = 0; c < 6; ++c)
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b) {
                    double expect = (c == a ? df[b] : 0.0) + (c == b ? df[a] : 0.0) -
                                    (a == b ? df[c] : 0.0);
                    CHECK(G.at(c, a, b).value == doctest::Approx(expect).epsilon(1e-9));
                }
    }
}

TEST_CASE("unit sphere: sectional curvature one, curvature operator is the identity") {
    const Manifold& m = find_manifold("s6_nearly_kaehler");
    PointGeometry g = analyze_point(m, sample_points(m, 1, 5)[0]);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (a == b) continue;
            CHECK(g.R_fr.at(a, b, a, b) == doctest::Approx(1.0).epsilon(1e-9));
        }
    CHECK(g.sp.s == doctest::Approx(30.0).epsilon(1e-9));
    // r(F) = F
    Form rf = curvature_op(g.R_fr, g.dec.F);
    CHECK(max_abs_diff(rf, g.dec.F) < 1e-9);
    CHECK(g.sp.s_J == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(std::abs(g.sp.weyl_F) < 1e-8);
}

TEST_CASE("riemann symmetries hold on every zoo entry") {
    for (const auto& m : catalog()) {
        PointGeometry g = analyze_point(m, sample_points(m, 1, 11)[0]);
        CHECK(riemann_symmetry_residual(g.R_fr) < 1e-9);
        CHECK(metric_compat_residual(g.mj, g.gamma) < 1e-10);
    }
}

TEST_CASE("pinned scalar curvatures") {
    CHECK(analyze_point(find_manifold("iwasawa"), sample_points(find_manifold("iwasawa"), 1, 5)[0])
              .sp.s == doctest::Approx(-1.0).epsilon(1e-9));
    const Manifold& kt = find_manifold("kodaira_thurston");
    PointGeometry g = analyze_point(kt, sample_points(kt, 1, 5)[0]);
    CHECK(g.sp.s == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(g.sp.s_J == doctest::Approx(0.5).epsilon(1e-9));
    const Manifold& kc = find_manifold("kodaira_thurston_cplx");
    PointGeometry gc = analyze_point(kc, sample_points(kc, 1, 5)[0]);
    CHECK(gc.sp.s == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(gc.sp.s_J == doctest::Approx(-1.5).epsilon(1e-9));
    const Manifold& h2 = find_manifold("hopf_2");
    CHECK(analyze_point(h2, sample_points(h2, 1, 5)[0]).sp.s == doctest::Approx(6.0).epsilon(1e-9));
    const Manifold& h3 = find_manifold("hopf_3");
    CHECK(analyze_point(h3, sample_points(h3, 1, 5)[0]).sp.s == doctest::Approx(20.0).epsilon(1e-9));
}

TEST_CASE("scalar curvature is constant on homogeneous members") {
    for (const char* name : {"hopf_2", "iwasawa", "kodaira_thurston"}) {
        const Manifold& m = find_manifold(name);
        auto pts = sample_points(m, 5, 23);
        double first = analyze_point(m, pts[0]).sp.s;
        for (int i = 1; i < 5; ++i)
            CHECK(std::abs(analyze_point(m, pts[i]).sp.s - first) < 1e-9);
    }
}

TEST_CASE("j-ricci symmetry and the two routes to the j-ricci form") {
    for (const char* name : {"hopf_2", "s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        PointGeometry g = analyze_point(m, sample_points(m, 1, 31)[0]);
        // Ric_J(X, Y) = Ric_J(JY, JX)
        for (int b = 0; b < g.d; ++b)
            for (int c = 0; c < g.d; ++c) {
                auto [jb, sb] = j_index(b, g.n);
                auto [jc, sc] = j_index(c, g.n);
                CHECK(std::abs(g.ricj(b, c) - sb * sc * g.ricj(jc, jb)) < 1e-9);
            }
        // rho_J = r(F) and s_J = 2 <r(F), F>
        CHECK(max_abs_diff(g.rho_j, g.rho_j_op) < 1e-9);
        CHECK(std::abs(g.sp.s_J - 2.0 * inner(g.rho_j_op, g.dec.F)) < 1e-9);
    }
}

TEST_CASE("weyl contraction identity in terms of the two scalar curvatures") {
    for (const char* name :
         {"hopf_2", "hopf_3", "iwasawa", "kodaira_thurston", "s6_nearly_kaehler",
          "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        PointGeometry g = analyze_point(m, sample_points(m, 1, 37)[0]);
        double expected = ((2 * g.n - 1) * g.sp.s_J - g.sp.s) / (2.0 * (2 * g.n - 1));
        CHECK(std::abs(g.sp.weyl_F - expected) < 1e-8);
    }
}

TEST_CASE("conformally flat members have vanishing weyl contraction") {
    for (const char* name : {"hopf_2", "hopf_3"}) {
        const Manifold& m = find_manifold(name);
        PointGeometry g = analyze_point(m, sample_points(m, 1, 41)[0]);
        CHECK(std::abs(g.sp.weyl_F) < 1e-8);
    }
}

TEST_CASE("nabla F: defining identity and symmetries") {
    for (const char* name : {"hopf_2", "kodaira_thurston", "s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        PointGeometry g = analyze_point(m, sample_points(m, 1, 43)[0]);
        CHECK(nabla_f_symmetry_residual(g.nablaF_fr, g.n) < 1e-9);
        CHECK(nabla_f_from_df_n_residual(g.nablaF_fr, g.dec) < 1e-9);
    }
}

TEST_CASE("nearly Kahler sphere norm values") {
    const Manifold& m = find_manifold("s6_nearly_kaehler");
    PointGeometry g = analyze_point(m, sample_points(m, 1, 47)[0]);
    CHECK(g.nb.nsq_nablaF == doctest::Approx(12.0).epsilon(1e-8));
    CHECK(g.nb.nsq_dF == doctest::Approx(36.0).epsilon(1e-8));
}

TEST_SUITE_END();
