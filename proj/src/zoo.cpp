#include <cmath>

#include "ahg/manifold.hpp"

namespace ahg {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Jet> coord_jets(std::span<const double> x, int order) {
    const int d = int(x.size());
    std::vector<Jet> c(d);
    for (int i = 0; i < d; ++i) c[i] = jet_coordinate(d, order, i, x[i]);
    return c;
}

MatJ const_mat(const MatD& m, int d, int order) {
    MatJ r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = jet_const(d, order, m(i, j));
    return r;
}

std::vector<std::vector<std::string>> const_matrix_exprs(const MatD& m) {
    std::vector<std::vector<std::string>> r(m.rows, std::vector<std::string>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            double v = m(i, j);
            r[i][j] = v == 0.0 ? "0" : v == 1.0 ? "1" : v == -1.0 ? "-1" : std::to_string(v);
        }
    return r;
}

MatD j0_mat(int n) {
    MatD J(2 * n, 2 * n, 0.0);
    for (int i = 0; i < n; ++i) {
        J(n + i, i) = 1.0;
        J(i, n + i) = -1.0;
    }
    return J;
}

Manifold flat_torus(int n) {
    Manifold m;
    m.name = "flat_torus_" + std::to_string(2 * n);
    m.n = n;
    const int d = 2 * n;
    MatD h0 = mat_identity(d, 1.0, 0.0);
    MatD J0 = j0_mat(n);
    m.field = [d, n, h0, J0](std::span<const double>, int order) {
        return StructureJets{n, const_mat(h0, d, order), const_mat(J0, d, order)};
    };
    m.domain.kind = Domain::Kind::PeriodicBox;
    m.domain.box.assign(d, {0.0, 1.0});
    m.domain.sample_box = m.domain.box;
    m.domain.homogeneous = true;
    m.expected_class = "Kahler";
    m.expected_scalars = {{"s", 0}, {"s_J", 0},        {"nsq_dF", 0}, {"nsq_nablaF", 0},
                          {"nsq_lee", 0}, {"delta_lee", 0}, {"s1@1", 0},   {"s2@1", 0}};
    m.exportable = true;
    m.metric_exprs = const_matrix_exprs(h0);
    m.j_exprs = const_matrix_exprs(J0);
    return m;
}

// Nilmanifold with invariant coframe dx, dy, dz - x dy, dt and two
// compatible complex structures: the symplectic (non-integrable) pairing and
// the integrable one.
Manifold kodaira_thurston(bool integrable) {
    Manifold m;
    m.name = integrable ? "kodaira_thurston_cplx" : "kodaira_thurston";
    m.n = 2;
    m.field = [integrable](std::span<const double> x, int order) {
        auto c = coord_jets(x, order);
        const int d = 4;
        Jet zero = jet_const(d, order, 0.0);
        Jet one = jet_const(d, order, 1.0);
        MatJ h(d, d, zero);
        h(0, 0) = one;
        h(1, 1) = one + c[0] * c[0];
        h(1, 2) = -c[0];
        h(2, 1) = -c[0];
        h(2, 2) = one;
        h(3, 3) = one;
        MatJ J(d, d, zero);
        if (!integrable) {
            // J d1 = d3, J d2 = x1 d1 + d4, J d3 = -d1, J d4 = -d2 - x1 d3
            J(2, 0) = one;
            J(0, 1) = c[0];
            J(3, 1) = one;
            J(0, 2) = -one;
            J(1, 3) = -one;
            J(2, 3) = -c[0];
        } else {
            // J d1 = d2 + x1 d3, J d2 = -d1 - x1 d4, J d3 = d4, J d4 = -d3
            J(1, 0) = one;
            J(2, 0) = c[0];
            J(0, 1) = -one;
            J(3, 1) = -c[0];
            J(3, 2) = one;
            J(2, 3) = -one;
        }
        return StructureJets{2, std::move(h), std::move(J)};
    };
    m.domain.kind = Domain::Kind::PeriodicBox;
    m.domain.box.assign(4, {0.0, 1.0});
    m.domain.sample_box = m.domain.box;
    m.domain.homogeneous = true;
    if (!integrable) {
        m.expected_class = "W2";
        m.expected_scalars = {{"s", -0.5},      {"s_J", 0.5},    {"nsq_N0", 4},
                              {"nsq_dF", 0},    {"nsq_lee", 0},  {"nsq_nablaF", 1},
                              {"delta_lee", 0}};
    } else {
        m.expected_class = "W4";
        m.expected_scalars = {{"s", -0.5},      {"s_J", -1.5},  {"nsq_dF", 1},
                              {"nsq_lee", 1},   {"nsq_N0", 0},  {"nsq_nablaF", 1},
                              {"delta_lee", 0}};
    }
    m.exportable = true;
    m.metric_exprs = {{"1", "0", "0", "0"},
                      {"0", "1+x1^2", "-x1", "0"},
                      {"0", "-x1", "1", "0"},
                      {"0", "0", "0", "1"}};
    if (!integrable)
        m.j_exprs = {{"0", "x1", "-1", "0"},
                     {"0", "0", "0", "-1"},
                     {"1", "0", "0", "-x1"},
                     {"0", "1", "0", "0"}};
    else
        m.j_exprs = {{"0", "-1", "0", "0"},
                     {"1", "0", "0", "0"},
                     {"x1", "0", "0", "-1"},
                     {"0", "-x1", "1", "0"}};
    return m;
}

// Conformally flat annulus model of S^1 x S^{2n-1}: h = delta / |z|^2 with
// the standard J; the radial identification z ~ 2z bounds the fundamental
// domain, whose volume is log(2) * vol(S^{2n-1}).
Manifold hopf(int n) {
    Manifold m;
    m.name = "hopf_" + std::to_string(n);
    m.n = n;
    const int d = 2 * n;
    MatD J0 = j0_mat(n);
    m.field = [d, n, J0](std::span<const double> x, int order) {
        auto c = coord_jets(x, order);
        Jet r2 = c[0] * c[0];
        for (int i = 1; i < d; ++i) r2 = r2 + c[i] * c[i];
        Jet zero = jet_const(d, order, 0.0);
        Jet inv = jet_const(d, order, 1.0) / r2;
        MatJ h(d, d, zero);
        for (int i = 0; i < d; ++i) h(i, i) = inv;
        return StructureJets{n, std::move(h), const_mat(J0, d, order)};
    };
    m.domain.kind = Domain::Kind::HomogeneousAtlas;
    double sphere_vol = 2.0 * std::pow(kPi, n); // 2 pi^n / (n-1)!
    for (int k = 2; k < n; ++k) sphere_vol /= k;
    m.domain.volume = std::log(2.0) * sphere_vol;
    m.domain.sample_box.assign(d, {0.5, 0.9});
    m.domain.homogeneous = true;
    m.expected_class = "W4";
    double a2 = 4.0 * (n - 1) * (n - 1);
    double df2 = a2 / (n - 1);
    double s = (2 * n - 1) * (2 * n - 2);
    m.expected_scalars = {{"s", s},
                          {"s_J", s - a2},
                          {"nsq_lee", a2},
                          {"nsq_dF", df2},
                          {"nsq_nablaF", df2},
                          {"delta_lee", 0},
                          {"s1@1", s / 2 + df2 / 4},
                          {"s2@1", s / 2 + df2 / 4 - a2 / 2}};
    m.exportable = true;
    std::string r2s = "x1^2";
    for (int i = 2; i <= d; ++i) r2s += "+x" + std::to_string(i) + "^2";
    m.metric_exprs.assign(d, std::vector<std::string>(d, "0"));
    for (int i = 0; i < d; ++i) m.metric_exprs[i][i] = "1/(" + r2s + ")";
    m.j_exprs = const_matrix_exprs(J0);
    return m;
}

// Quotient of the complex Heisenberg group; unitary coframe
// dz1, dz2, dz3 - z1 dz2 with the standard complex structure.  Coordinates
// are (x1, x2, x3, y1, y2, y3).
Manifold iwasawa() {
    Manifold m;
    m.name = "iwasawa";
    m.n = 3;
    m.field = [](std::span<const double> x, int order) {
        auto c = coord_jets(x, order);
        const int d = 6;
        Jet zero = jet_const(d, order, 0.0);
        Jet one = jet_const(d, order, 1.0);
        // normalized so the coframe entries have unit norm against the
        // unitary frame convention u_i = (e_i - sqrt(-1) e_{n+i}) / sqrt(2)
        Jet two = jet_const(d, order, 2.0);
        MatJ h(d, d, zero);
        for (int i = 0; i < d; ++i) h(i, i) = two;
        const Jet& a = c[0]; // x1
        const Jet& b = c[3]; // y1
        h(1, 1) = (one + a * a + b * b) * 2.0;
        h(4, 4) = (one + a * a + b * b) * 2.0;
        h(1, 2) = a * -2.0;
        h(2, 1) = a * -2.0;
        h(1, 5) = b * -2.0;
        h(5, 1) = b * -2.0;
        h(4, 2) = b * 2.0;
        h(2, 4) = b * 2.0;
        h(4, 5) = a * -2.0;
        h(5, 4) = a * -2.0;
        return StructureJets{3, std::move(h), const_mat(j0_mat(3), d, order)};
    };
    m.domain.kind = Domain::Kind::PeriodicBox;
    m.domain.box.assign(6, {0.0, 1.0});
    m.domain.sample_box = m.domain.box;
    m.domain.homogeneous = true;
    m.expected_class = "W3";
    m.expected_scalars = {{"s", -1},     {"s_J", -1},       {"nsq_dF", 2},  {"nsq_lee", 0},
                          {"nsq_nablaF", 2}, {"delta_lee", 0}, {"s1@1", 0},    {"s2@1", 0},
                          {"s1@-1", 0},  {"s2@-1", -2}};
    m.exportable = true;
    m.metric_exprs = {{"2", "0", "0", "0", "0", "0"},
                      {"0", "2*(1+x1^2+x4^2)", "-2*x1", "0", "0", "-2*x4"},
                      {"0", "-2*x1", "2", "0", "2*x4", "0"},
                      {"0", "0", "0", "2", "0", "0"},
                      {"0", "0", "2*x4", "0", "2*(1+x1^2+x4^2)", "-2*x1"},
                      {"0", "-2*x4", "0", "0", "-2*x1", "2"}};
    m.j_exprs = const_matrix_exprs(j0_mat(3));
    return m;
}

// Seven-dimensional cross product structure constants (imaginary octonions).
const int kCrossTriples[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 6, 5}, {1, 3, 5},
                                 {1, 4, 6}, {2, 3, 6}, {2, 5, 4}};

MatJ cross_product_j(const std::vector<Jet>& p) {
    const int d = p[0].dim;
    const int order = p[0].order;
    Jet zero = jet_const(d, order, 0.0);
    MatJ J(7, 7, zero);
    // (p x v)_k = eps_{ijk} p_i v_j
    for (const auto& t : kCrossTriples) {
        const int perms[6][4] = {{t[0], t[1], t[2], 1}, {t[1], t[2], t[0], 1},
                                 {t[2], t[0], t[1], 1}, {t[1], t[0], t[2], -1},
                                 {t[0], t[2], t[1], -1}, {t[2], t[1], t[0], -1}};
        for (const auto& q : perms) {
            Jet term = q[3] > 0 ? p[q[0]] : -p[q[0]];
            J(q[2], q[1]) = J(q[2], q[1]) + term;
        }
    }
    return J;
}

Manifold s6_nearly_kaehler() {
    Manifold m;
    m.name = "s6_nearly_kaehler";
    m.n = 3;
    m.field = [](std::span<const double> x, int order) {
        const int d = 6;
        // J pulled back through the chart needs one more derivative of the
        // embedding than the requested structure order.
        auto c = coord_jets(x, order + 1);
        Jet r2 = c[0] * c[0];
        for (int i = 1; i < d; ++i) r2 = r2 + c[i] * c[i];
        Jet denom = r2 + 1.0;
        std::vector<Jet> E(7);
        for (int i = 0; i < d; ++i) E[i] = (c[i] * 2.0) / denom;
        E[6] = (jet_const(d, order + 1, 1.0) - r2) / denom;
        return embedded_structure(E, cross_product_j, 3);
    };
    m.domain.kind = Domain::Kind::HomogeneousAtlas;
    m.domain.volume = 16.0 * kPi * kPi * kPi / 15.0; // vol(S^6)
    m.domain.sample_box.assign(6, {-0.45, 0.45});
    m.domain.homogeneous = true;
    m.expected_class = "W1";
    m.expected_scalars = {{"s", 30},        {"s_J", 6},     {"nsq_dF", 36}, {"nsq_nablaF", 12},
                          {"nsq_lee", 0},   {"delta_lee", 0}, {"s1@1", 0},    {"s2@1", 12},
                          {"s1@-1", 0},     {"s2@-1", 12}};
    m.exportable = false;
    return m;
}

// Torus with seeded trigonometric perturbations of both h and J; generic in
// the sense that all four structure components are nonzero somewhere.
Manifold perturbed_torus() {
    Manifold m;
    m.name = "perturbed_torus";
    m.n = 3;
    const int d = 6;
    static constexpr double amp = 0.05;
    // seeded coefficient tables, fixed once
    struct Entry {
        double ca, cb;
        int ax, bx;
    };
    static std::vector<Entry> sj, sh;
    if (sj.empty()) {
        Rng rng(0x5eed0001u);
        for (int i = 0; i < d * d; ++i)
            sj.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), int(rng.next() % d),
                          int(rng.next() % d)});
        for (int i = 0; i < d * d; ++i)
            sh.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), int(rng.next() % d),
                          int(rng.next() % d)});
    }
    MatD J0 = j0_mat(3);
    m.field = [J0](std::span<const double> x, int order) {
        const int dd = 6;
        auto c = coord_jets(x, order);
        Jet zero = jet_const(dd, order, 0.0);
        auto entry = [&](const Entry& e) {
            return sin(c[e.ax]) * e.ca + cos(c[e.bx]) * e.cb;
        };
        MatJ A(dd, dd, zero), P(dd, dd, zero);
        for (int i = 0; i < dd; ++i)
            for (int j = 0; j < dd; ++j) {
                A(i, j) = entry(sj[i * dd + j]) * amp;
                P(i, j) = entry(sh[i * dd + j]) * amp;
            }
        for (int i = 0; i < dd; ++i) A(i, i) = A(i, i) + 1.0;
        MatJ J = matmul(matmul(A, const_mat(J0, dd, order)), inverse(A));
        MatJ h0(dd, dd, zero);
        for (int i = 0; i < dd; ++i)
            for (int j = 0; j < dd; ++j) {
                h0(i, j) = (P(i, j) + P(j, i)) * 0.5;
                if (i == j) h0(i, j) = h0(i, j) + 1.0;
            }
        // enforce J-invariance: h = (h0 + J^T h0 J) / 2
        MatJ JT = transpose(J);
        MatJ h = matmul(JT, matmul(h0, J));
        for (int i = 0; i < dd; ++i)
            for (int j = 0; j < dd; ++j) h(i, j) = (h(i, j) + h0(i, j)) * 0.5;
        return StructureJets{3, std::move(h), std::move(J)};
    };
    m.domain.kind = Domain::Kind::PeriodicBox;
    m.domain.box.assign(d, {0.0, 2 * kPi});
    m.domain.sample_box = m.domain.box;
    m.domain.homogeneous = false;
    m.expected_class = "W1+W2+W3+W4";
    m.exportable = false;
    return m;
}

} // namespace

StructureJets embedded_structure(const std::vector<Jet>& embedding,
                                 const std::function<MatJ(const std::vector<Jet>&)>& ambient_j,
                                 int n) {
    const int mdim = int(embedding.size());
    const int d = embedding[0].dim;
    if (embedding[0].order < 2) throw OrderError("embedded_structure needs embedding order >= 2");
    MatJ DE(mdim, d);
    for (int i = 0; i < mdim; ++i)
        for (int a = 0; a < d; ++a) DE(i, a) = lower_to_derivative(embedding[i], a);
    MatJ DEt = transpose(DE);
    MatJ h = matmul(DEt, DE);
    Jet det = determinant(h);
    if (!(det.value > 1e-12)) throw ChartError("embedding differential is rank deficient");
    MatJ Jamb = ambient_j(embedding);
    MatJ Jchart = matmul(inverse(h), matmul(DEt, matmul(Jamb, DE)));
    return StructureJets{n, std::move(h), std::move(Jchart)};
}

const std::vector<Manifold>& catalog() {
    static const std::vector<Manifold> zoo = [] {
        std::vector<Manifold> v;
        v.push_back(flat_torus(2));
        v.push_back(flat_torus(3));
        v.push_back(kodaira_thurston(false));
        v.push_back(kodaira_thurston(true));
        v.push_back(hopf(2));
        v.push_back(hopf(3));
        v.push_back(iwasawa());
        v.push_back(s6_nearly_kaehler());
        v.push_back(perturbed_torus());
        return v;
    }();
    return zoo;
}

const Manifold& find_manifold(const std::string& name) {
    for (const auto& m : catalog())
        if (m.name == name) return m;
    throw DomainError("unknown manifold: " + name);
}

std::vector<ChartPoint> sample_points(const Manifold& m, int count, std::uint64_t seed) {
    Rng rng(seed ^ 0xab54a98ceb1f0ad2ull);
    const auto& box = m.domain.sample_box;
    std::vector<ChartPoint> pts(count);
    for (int i = 0; i < count; ++i) {
        pts[i].coords.resize(box.size());
        for (std::size_t a = 0; a < box.size(); ++a)
            pts[i].coords[a] = rng.uniform(box[a].first, box[a].second);
        pts[i].chart_id = m.name;
    }
    return pts;
}

} // namespace ahg
