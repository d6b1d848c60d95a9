#include "ahg/riemann.hpp"

#include <cmath>

namespace ahg {

Christoffel christoffel(const MetricJets& mj) {
    const int d = mj.h.rows;
    Christoffel G;
    G.d = d;
    G.g.assign(std::size_t(d) * d * d, Jet());
    // dh[a][b][c] = d_a h_{bc}, one order below h
    std::vector<Jet> dh(std::size_t(d) * d * d);
    auto dh_at = [&](int a, int b, int c) -> Jet& {
        return dh[(std::size_t(a) * d + b) * d + c];
    };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = b; c < d; ++c) {
                dh_at(a, b, c) = lower_to_derivative(mj.h(b, c), a);
                if (c != b) dh_at(a, c, b) = dh_at(a, b, c);
            }
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                Jet acc;
                bool first = true;
                for (int e = 0; e < d; ++e) {
                    Jet inner = dh_at(a, e, b) + dh_at(b, e, a) - dh_at(e, a, b);
                    Jet term = mj.hinv(c, e) * inner;
                    acc = first ? term : acc + term;
                    first = false;
                }
                acc = acc * 0.5;
                G.at(c, a, b) = acc;
                if (b != a) G.at(c, b, a) = acc;
            }
    return G;
}

double metric_compat_residual(const MetricJets& mj, const Christoffel& gamma) {
    const int d = mj.h.rows;
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                double dh = mj.h(b, c).g(a);
                double rec = 0;
                for (int e = 0; e < d; ++e)
                    rec += mj.h(c, e).value * gamma.at(e, a, b).value +
                           mj.h(b, e).value * gamma.at(e, a, c).value;
                res = std::max(res, std::abs(dh - rec));
            }
    return res;
}

T4 riemann_coord(const MetricJets& mj, const Christoffel& gamma) {
    const int d = mj.h.rows;
    T4 rop(d); // rop(e, b, c, dd) = coefficient of e_E in (D_C D_D - D_D D_C) e_B
    for (int e = 0; e < d; ++e)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    double v = gamma.at(e, dd, b).g(c) - gamma.at(e, c, b).g(dd);
                    for (int g = 0; g < d; ++g)
                        v += gamma.at(e, c, g).value * gamma.at(g, dd, b).value -
                             gamma.at(e, dd, g).value * gamma.at(g, c, b).value;
                    rop.at(e, b, c, dd) = v;
                }
    T4 r(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    double v = 0;
                    for (int e = 0; e < d; ++e) v += mj.h(a, e).value * rop.at(e, b, c, dd);
                    r.at(a, b, c, dd) = v;
                }
    return r;
}

std::vector<Jet> nabla_j(const StructureJets& sj, const Christoffel& gamma) {
    const int d = 2 * sj.n;
    std::vector<Jet> nj(std::size_t(d) * d * d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Jet acc = lower_to_derivative(sj.J(a, b), c);
                for (int e = 0; e < d; ++e)
                    acc = acc + gamma.at(a, c, e) * sj.J(e, b) - gamma.at(e, c, b) * sj.J(a, e);
                nj[(std::size_t(c) * d + a) * d + b] = acc;
            }
    return nj;
}

T3 nabla_f_coord(const StructureJets& sj, const std::vector<Jet>& nj) {
    const int d = 2 * sj.n;
    T3 r(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                double v = 0;
                for (int e = 0; e < d; ++e)
                    v += sj.h(e, c).value * nj_at(nj, d, a, e, b).value;
                r.at(a, b, c) = v;
            }
    return r;
}

MatD ricci_frame(const T4& r) {
    const int d = r.d;
    MatD ric(d, d, 0.0);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            double s = 0;
            for (int a = 0; a < d; ++a) s += r.at(a, b, a, c);
            ric(b, c) = s;
        }
    return ric;
}

double scalar_s(const MatD& ric) {
    double s = 0;
    for (int a = 0; a < ric.rows; ++a) s += ric(a, a);
    return s;
}

namespace {
inline std::pair<int, double> jmap(int a, int n) {
    return a < n ? std::make_pair(a + n, 1.0) : std::make_pair(a - n, -1.0);
}
} // namespace

MatD j_ricci_frame(const T4& r, int n) {
    const int d = r.d;
    MatD ricj(d, d, 0.0);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            auto [jc, sc] = jmap(c, n);
            double s = 0;
            for (int a = 0; a < d; ++a) {
                auto [ja, sa] = jmap(a, n);
                s += sa * sc * r.at(a, b, ja, jc);
            }
            ricj(b, c) = s;
        }
    return ricj;
}

double scalar_sJ(const MatD& ricj) { return scalar_s(ricj); }

Form curvature_op(const T4& r, const Form& w) {
    const int d = r.d;
    Form out(d, 2, Basis::Frame);
    const auto& pairs = combs(d, 2).list;
    for (std::size_t o = 0; o < pairs.size(); ++o) {
        double acc = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            acc += r.at(pairs[o][0], pairs[o][1], pairs[i][0], pairs[i][1]) * w.c[i];
        out.c[o] = acc;
    }
    return out;
}

Form rho_j_from_ricci(const MatD& ricj, int n) {
    const int d = 2 * n;
    Form rho(d, 2, Basis::Frame);
    const auto& pairs = combs(d, 2).list;
    for (std::size_t o = 0; o < pairs.size(); ++o) {
        auto [jb, sb] = jmap(pairs[o][1], n);
        rho.c[o] = -sb * ricj(pairs[o][0], jb);
    }
    return rho;
}

T4 weyl_frame(const T4& r, const MatD& ric, double s) {
    const int d = r.d;
    const double m = double(d);
    MatD ric0 = ric;
    for (int a = 0; a < d; ++a) ric0(a, a) -= s / m;
    T4 w = r;
    const double cs = s / (2.0 * m * (m - 1.0));
    const double cr = 1.0 / (m - 2.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    double kn_r = ric0(a, c) * (b == e) + ric0(b, e) * (a == c) -
                                  ric0(a, e) * (b == c) - ric0(b, c) * (a == e);
                    double kn_h = 2.0 * ((a == c) * (b == e) - (a == e) * (b == c));
                    w.at(a, b, c, e) -= cr * kn_r + cs * kn_h;
                }
    return w;
}

double weyl_contract_f(const T4& w, const Form& f) {
    Form wf = curvature_op(w, f);
    return inner(wf, f);
}

double riemann_symmetry_residual(const T4& r) {
    const int d = r.d;
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    double x = r.at(a, b, c, e);
                    res = std::max(res, std::abs(x + r.at(b, a, c, e)));
                    res = std::max(res, std::abs(x + r.at(a, b, e, c)));
                    res = std::max(res, std::abs(x - r.at(c, e, a, b)));
                    res = std::max(res,
                                   std::abs(x + r.at(a, c, e, b) + r.at(a, e, b, c)));
                }
    return res;
}

} // namespace ahg
