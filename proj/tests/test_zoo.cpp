#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ahg/frame.hpp"
#include "ahg/manifold.hpp"

using namespace ahg;

namespace {

double structure_residual(const StructureJets& sj) {
    const int d = 2 * sj.n;
    MatD h = values_of(sj.h), J = values_of(sj.J);
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double j2 = 0, hjj = 0;
            for (int c = 0; c < d; ++c) j2 += J(a, c) * J(c, b);
            res = std::max(res, std::abs(j2 + (a == b ? 1.0 : 0.0)));
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) hjj += J(c, a) * h(c, e) * J(e, b);
            res = std::max(res, std::abs(hjj - h(a, b)));
            res = std::max(res, std::abs(h(a, b) - h(b, a)));
        }
    return res;
}

double frame_residual(const StructureJets& sj, const Frame& f) {
    const int d = 2 * sj.n;
    MatD h = values_of(sj.h);
    double res = 0;
    for (int A = 0; A < d; ++A)
        for (int B = 0; B < d; ++B) {
            double dot = 0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) dot += h(a, b) * f.E(a, A) * f.E(b, B);
            res = std::max(res, std::abs(dot - (A == B ? 1.0 : 0.0)));
        }
    return res;
}

} // namespace

TEST_SUITE_BEGIN("zoo");

TEST_CASE("catalog holds the expected entries") {
    const auto& zoo = catalog();
    CHECK(zoo.size() >= 7);
    for (const char* name : {"flat_torus_4", "flat_torus_6", "kodaira_thurston",
                             "kodaira_thurston_cplx", "hopf_2", "hopf_3", "iwasawa",
                             "s6_nearly_kaehler", "perturbed_torus"})
        CHECK_NOTHROW(find_manifold(name));
    CHECK_THROWS_AS(find_manifold("nope"), DomainError);
}

TEST_CASE("every entry is an almost Hermitian structure with a good frame") {
    for (const auto& m : catalog()) {
        auto pts = sample_points(m, 4, 2024);
        for (const auto& p : pts) {
            StructureJets sj = m.eval(p, 2);
            CHECK(structure_residual(sj) < 1e-9);
            Frame f = build_adapted_frame(values_of(sj.h), values_of(sj.J));
            CHECK(frame_residual(sj, f) < 1e-12);
            // Hermitian orthonormality of the unitary frame
            MatD h = values_of(sj.h);
            for (int i = 0; i < m.n; ++i)
                for (int j = 0; j < m.n; ++j) {
                    std::complex<double> huu = 0, huubar = 0;
                    for (int a = 0; a < m.dim(); ++a)
                        for (int b = 0; b < m.dim(); ++b) {
                            huu += h(a, b) * f.U(a, i) * f.U(b, j);
                            huubar += h(a, b) * f.U(a, i) * std::conj(f.U(b, j));
                        }
                    CHECK(std::abs(huu) < 1e-12);
                    CHECK(std::abs(huubar - (i == j ? 1.0 : 0.0)) < 1e-12);
                }
        }
    }
}

TEST_CASE("unitary frame vectors are J eigenvectors") {
    for (const char* name : {"hopf_2", "s6_nearly_kaehler", "perturbed_torus"}) {
        const Manifold& m = find_manifold(name);
        auto p = sample_points(m, 1, 77)[0];
        StructureJets sj = m.eval(p, 1);
        MatD J = values_of(sj.J);
        Frame f = build_adapted_frame(values_of(sj.h), J);
        const std::complex<double> I(0, 1);
        for (int i = 0; i < m.n; ++i)
            for (int a = 0; a < m.dim(); ++a) {
                std::complex<double> ju = 0;
                for (int b = 0; b < m.dim(); ++b) ju += J(a, b) * f.U(b, i);
                CHECK(std::abs(ju - I * f.U(a, i)) < 1e-12);
            }
    }
}

TEST_CASE("flat torus frame is the standard basis") {
    const Manifold& m = find_manifold("flat_torus_4");
    double x[4] = {0.2, 0.4, 0.6, 0.8};
    StructureJets sj = m.eval(x, 1);
    Frame f = build_adapted_frame(values_of(sj.h), values_of(sj.J));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(f.E(a, b) == doctest::Approx(a == b ? 1.0 : 0.0));
}

TEST_CASE("nilmanifold frame reproduces the invariant frame") {
    const Manifold& m = find_manifold("kodaira_thurston");
    double x[4] = {0.7, 0.1, 0.9, 0.3};
    StructureJets sj = m.eval(x, 1);
    Frame f = build_adapted_frame(values_of(sj.h), values_of(sj.J));
    // e2 should be d_y + x d_z (already unit), e3 = J e1 = d_z
    CHECK(f.E(1, 1) == doctest::Approx(1.0));
    CHECK(f.E(2, 1) == doctest::Approx(x[0]));
    CHECK(f.E(2, 2) == doctest::Approx(1.0));
    CHECK(f.E(3, 3) == doctest::Approx(1.0));
}

TEST_CASE("frame construction error paths") {
    MatD h = mat_identity(4, 1.0, 0.0);
    MatD J(4, 4, 0.0);
    J(2, 0) = 1;
    J(0, 2) = -1;
    J(3, 1) = 1;
    J(1, 3) = -1;
    // degenerate candidates: two copies of the same vector
    std::vector<std::vector<double>> cands = {{1, 0, 0, 0}, {1, 0, 0, 0}};
    CHECK_THROWS_AS(build_adapted_frame(h, J, cands), DegenerateFrame);
    MatD badJ = J;
    badJ(2, 0) = 0.5;
    CHECK_THROWS_AS(build_adapted_frame(h, badJ), StructureError);
}

TEST_CASE("sphere chart metric is conformally flat to machine precision") {
    const Manifold& m = find_manifold("s6_nearly_kaehler");
    auto pts = sample_points(m, 3, 7);
    for (const auto& p : pts) {
        StructureJets sj = m.eval(p, 2);
        double r2 = 0;
        for (double v : p.coords) r2 += v * v;
        double c = 4.0 / ((1 + r2) * (1 + r2));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                CHECK(sj.h(a, b).value == doctest::Approx(a == b ? c : 0.0).epsilon(1e-12));
        CHECK(structure_residual(sj) < 1e-10);
    }
}

TEST_CASE("rank-deficient embeddings are rejected") {
    std::vector<Jet> e(3, jet_const(2, 3, 1.0)); // constant map R^2 -> R^3
    auto amb = [](const std::vector<Jet>&) { return MatJ(3, 3, jet_const(2, 3, 0.0)); };
    CHECK_THROWS_AS(embedded_structure(e, amb, 1), ChartError);
}

TEST_CASE("jet fields match the finite-difference oracle on every zoo entry") {
    for (const auto& m : catalog()) {
        const int d = m.dim();
        auto pts = sample_points(m, 3, 11);
        int checked = 0;
        for (const auto& p : pts) {
            StructureJets sj = m.eval(p, 2);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    for (int which = 0; which < 2; ++which) {
                        ScalarFn f = [&, a, b, which](std::span<const double> x) {
                            StructureJets s = m.eval(x, 1);
                            return which == 0 ? s.h(a, b).value : s.J(a, b).value;
                        };
                        const Jet& jet = which == 0 ? sj.h(a, b) : sj.J(a, b);
                        Jet fd = fd_oracle(f, p.coords, 2, 1e-4);
                        double scale = std::max(1.0, std::abs(jet.value));
                        for (int i = 0; i < d; ++i) {
                            CHECK(std::abs(fd.g(i) - jet.g(i)) < 1e-5 * std::max(scale, std::abs(jet.g(i))));
                        }
                        for (int i = 0; i < d; ++i)
                            for (int j = 0; j < d; ++j)
                                CHECK(std::abs(fd.h(i, j) - jet.h(i, j)) <
                                      2e-4 * std::max(scale, std::abs(jet.h(i, j))));
                        ++checked;
                    }
                }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("parsed expressions agree with the built-in closed forms") {
    Rng rng(99);
    for (const auto& m : catalog()) {
        if (!m.exportable) continue;
        const int d = m.dim();
        std::vector<std::vector<ExprAst>> hm(d), jm(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                hm[a].push_back(parse_expr(m.metric_exprs[a][b], d));
                jm[a].push_back(parse_expr(m.j_exprs[a][b], d));
            }
        auto pts = sample_points(m, m.name.starts_with("hopf") ? 50 : 10, 123);
        for (const auto& p : pts) {
            StructureJets sj = m.eval(p, 2);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    Jet he = eval_expr(hm[a][b], p.coords, 2);
                    Jet je = eval_expr(jm[a][b], p.coords, 2);
                    CHECK(std::abs(he.value - sj.h(a, b).value) < 1e-14);
                    CHECK(std::abs(je.value - sj.J(a, b).value) < 1e-14);
                    for (int i = 0; i < d; ++i) {
                        CHECK(std::abs(he.g(i) - sj.h(a, b).g(i)) < 1e-13);
                        CHECK(std::abs(je.g(i) - sj.J(a, b).g(i)) < 1e-13);
                    }
                }
        }
    }
}

TEST_CASE("manifold JSON export and reload round-trips the fields") {
    const Manifold& hopf = find_manifold("hopf_2");
    std::string text = manifold_to_json_text(hopf);
    Manifold back = manifold_from_json_text(text);
    CHECK(back.n == 2);
    CHECK(back.expected_class == "W4");
    auto pts = sample_points(hopf, 5, 5);
    for (const auto& p : pts) {
        StructureJets a = hopf.eval(p, 2);
        StructureJets b = back.eval(p, 2);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(a.h(i, j).value == doctest::Approx(b.h(i, j).value).epsilon(1e-14));
                CHECK(a.J(i, j).value == doctest::Approx(b.J(i, j).value).epsilon(1e-14));
            }
    }
    CHECK_THROWS_AS(manifold_to_json_text(find_manifold("s6_nearly_kaehler")), DomainError);
}

TEST_CASE("manifold JSON validation errors") {
    CHECK_THROWS_AS(manifold_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(manifold_from_json_text(R"({"dim": 3, "metric": [], "J": []})"),
                    DomainError);
    CHECK_THROWS_AS(manifold_from_json_text(
                        R"({"dim": 4, "metric": [["1","0"],["0","1"]], "J": []})"),
                    DomainError);
}

TEST_SUITE_END();
