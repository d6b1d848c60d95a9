#include "ahg/gauduchon.hpp"

#include <cmath>

namespace ahg {

namespace {

inline std::size_t idx3(int d, int c, int a, int b) {
    return (std::size_t(c) * d + a) * d + b;
}

} // namespace

ConnectionFamily connection_family(const StructureJets& sj, const MetricJets& mj,
                                   const Christoffel& gamma, const std::vector<Jet>& nJ) {
    const int d = 2 * sj.n;
    ConnectionFamily cf;
    cf.d = d;
    cf.n = sj.n;
    const Jet zero = jet_const(d, gamma.g[0].order, 0.0);

    // J (nabla_C J): (jnj)[C][G][B] = J^G_E (nabla_C J)^E_B
    std::vector<Jet> jnj(std::size_t(d) * d * d, zero);
    for (int c = 0; c < d; ++c)
        for (int g = 0; g < d; ++g)
            for (int b = 0; b < d; ++b) {
                Jet acc = zero;
                for (int e = 0; e < d; ++e) acc = acc + sj.J(g, e) * nj_at(nJ, d, c, e, b);
                jnj[idx3(d, c, g, b)] = acc;
            }

    std::vector<Jet> low0(std::size_t(d) * d * d, zero), lowc(std::size_t(d) * d * d, zero);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Jet acc = zero;
                for (int e = 0; e < d; ++e)
                    acc = acc + mj.h(c, e) * gamma.at(e, a, b) - mj.h(c, e) * jnj[idx3(d, a, e, b)] * 0.5;
                low0[idx3(d, c, a, b)] = acc;

                // (t/4)[ h((nabla_{JY} J)Z, X) + h(J(nabla_Y J)Z, X)
                //       - h((nabla_{JZ} J)Y, X) - h(J(nabla_Z J)Y, X) ],
                // with X = d_A, Y = d_B, Z = d_C
                Jet corr = zero;
                for (int g = 0; g < d; ++g) {
                    Jet ta = zero, tc = zero;
                    for (int e = 0; e < d; ++e) {
                        ta = ta + sj.J(e, b) * nj_at(nJ, d, e, g, c);
                        tc = tc + sj.J(e, c) * nj_at(nJ, d, e, g, b);
                    }
                    corr = corr + mj.h(g, a) * (ta + jnj[idx3(d, b, g, c)] - tc -
                                                jnj[idx3(d, c, g, b)]);
                }
                lowc[idx3(d, c, a, b)] = corr * 0.25;
            }

    cf.base.assign(std::size_t(d) * d * d, zero);
    cf.corr.assign(std::size_t(d) * d * d, zero);
    for (int e = 0; e < d; ++e)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Jet acc0 = zero, accc = zero;
                for (int c = 0; c < d; ++c) {
                    acc0 = acc0 + mj.hinv(e, c) * low0[idx3(d, c, a, b)];
                    accc = accc + mj.hinv(e, c) * lowc[idx3(d, c, a, b)];
                }
                cf.base[idx3(d, e, a, b)] = acc0;
                cf.corr[idx3(d, e, a, b)] = accc;
            }
    return cf;
}

double connection_metric_residual(const ConnectionFamily& cf, const MetricJets& mj, double t) {
    const int d = cf.d;
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                double rec = 0;
                for (int e = 0; e < d; ++e)
                    rec += mj.h(e, c).value * cf.coeff(e, a, b, t) +
                           mj.h(b, e).value * cf.coeff(e, a, c, t);
                res = std::max(res, std::abs(mj.h(b, c).g(a) - rec));
            }
    return res;
}

double connection_j_residual(const ConnectionFamily& cf, const StructureJets& sj, double t) {
    const int d = cf.d;
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            for (int b = 0; b < d; ++b) {
                double v = sj.J(c, b).g(a);
                for (int e = 0; e < d; ++e)
                    v += cf.coeff(c, a, e, t) * sj.J(e, b).value -
                         cf.coeff(e, a, b, t) * sj.J(c, e).value;
                res = std::max(res, std::abs(v));
            }
    return res;
}

T3 torsion_t(const ConnectionFamily& cf, double t) {
    const int d = cf.d;
    T3 tor(d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                tor.at(c, a, b) = cf.coeff(c, a, b, t) - cf.coeff(c, b, a, t);
    return tor;
}

namespace {

using Cx = std::complex<double>;

// h-paired component <v, conj(w_i)> of a complex coordinate vector
Cx pair_with_ubar(const MatD& h, const MatC& U, std::span<const Cx> v, int i) {
    Cx acc = 0;
    for (int c = 0; c < h.rows; ++c)
        for (int u = 0; u < h.rows; ++u) acc += h(c, u) * v[c] * std::conj(U(u, i));
    return acc;
}

std::vector<Cx> contract_vectors(const T3& t, const MatC& U, int j, int k, bool bar_j,
                                 bool bar_k) {
    const int d = t.d;
    std::vector<Cx> v(d, 0.0);
    for (int c = 0; c < d; ++c) {
        Cx acc = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Cx ua = bar_j ? std::conj(U(a, j)) : U(a, j);
                Cx ub = bar_k ? std::conj(U(b, k)) : U(b, k);
                acc += t.at(c, a, b) * ua * ub;
            }
        v[c] = acc;
    }
    return v;
}

} // namespace

ChernTorsion chern_torsion(const ConnectionFamily& cf, const StructureJets& sj,
                           const Frame& fr) {
    const int n = cf.n, d = cf.d;
    MatD h = values_of(sj.h);
    T3 tor = torsion_t(cf, 1.0);
    ChernTorsion ct;
    ct.n = n;
    ct.holo.assign(std::size_t(n) * n * n, 0.0);
    ct.anti.assign(std::size_t(n) * n * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            auto tuu = contract_vectors(tor, fr.U, j, k, false, false);
            auto tbb = contract_vectors(tor, fr.U, j, k, true, true);
            auto tub = contract_vectors(tor, fr.U, j, k, false, true);
            for (int i = 0; i < n; ++i) {
                ct.holo[(std::size_t(i) * n + j) * n + k] = pair_with_ubar(h, fr.U, tuu, i);
                ct.anti[(std::size_t(i) * n + j) * n + k] = pair_with_ubar(h, fr.U, tbb, i);
            }
            double m2 = 0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    m2 += h(a, b) * (tub[a] * std::conj(tub[b])).real();
            ct.mixed_residual = std::max(ct.mixed_residual, std::sqrt(std::max(0.0, m2)));
        }
    return ct;
}

std::vector<Cx> nijenhuis_unitary(const StructureJets& sj, const Frame& fr) {
    const int n = sj.n;
    MatD h = values_of(sj.h);
    T3 nup = nijenhuis_coord(sj);
    std::vector<Cx> out(std::size_t(n) * n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto v = contract_vectors(nup, fr.U, i, j, true, true);
            for (int k = 0; k < n; ++k)
                out[(std::size_t(k) * n + i) * n + j] = pair_with_ubar(h, fr.U, v, k);
        }
    return out;
}

double connection_difference_residual(const ConnectionFamily& cf, const StructureJets& sj,
                                      const Frame& fr, const ChernTorsion& ct) {
    const int n = cf.n, d = cf.d;
    MatD h = values_of(sj.h);
    // gamma = A(0) - A(1) = -corr (values)
    T3 g(d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) g.at(c, a, b) = -cf.corr_at(c, a, b).value;
    double res = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // slots: gamma^i_j(X) = <gamma(X) u_j, conj u_i>, X = u_k or conj u_k
                Cx gu = 0, gb = 0;
                for (int c = 0; c < d; ++c) {
                    Cx accu = 0, accb = 0;
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b) {
                            accu += g.at(c, a, b) * fr.U(a, k) * fr.U(b, j);
                            accb += g.at(c, a, b) * std::conj(fr.U(a, k)) * fr.U(b, j);
                        }
                    for (int u = 0; u < d; ++u) {
                        gu += h(c, u) * accu * std::conj(fr.U(u, i));
                        gb += h(c, u) * accb * std::conj(fr.U(u, i));
                    }
                }
                res = std::max(res, std::abs(gu - 0.5 * ct.h(i, j, k)));
                res = std::max(res, std::abs(gb + 0.5 * std::conj(ct.h(j, i, k))));
            }
    return res;
}

namespace {

T4 curvature_values(const ConnectionFamily& cf, const MetricJets& mj, double t) {
    const int d = cf.d;
    T4 rop(d);
    for (int e = 0; e < d; ++e)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    double v = (cf.base_at(e, dd, b).g(c) + t * cf.corr_at(e, dd, b).g(c)) -
                               (cf.base_at(e, c, b).g(dd) + t * cf.corr_at(e, c, b).g(dd));
                    for (int g = 0; g < d; ++g)
                        v += cf.coeff(e, c, g, t) * cf.coeff(g, dd, b, t) -
                             cf.coeff(e, dd, g, t) * cf.coeff(g, c, b, t);
                    rop.at(e, b, c, dd) = v;
                }
    T4 k(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    double v = 0;
                    for (int e = 0; e < d; ++e) v += mj.h(a, e).value * rop.at(e, b, c, dd);
                    k.at(a, b, c, dd) = v;
                }
    return k;
}

} // namespace

CurvatureFamily curvature_family(const ConnectionFamily& cf, const MetricJets& mj) {
    CurvatureFamily kf;
    kf.d = cf.d;
    kf.n = cf.n;
    kf.k0 = curvature_values(cf, mj, 0.0);
    T4 kp = curvature_values(cf, mj, 1.0);
    T4 km = curvature_values(cf, mj, -1.0);
    kf.k1 = T4(cf.d);
    kf.k2 = T4(cf.d);
    for (std::size_t i = 0; i < kf.k0.v.size(); ++i) {
        kf.k1.v[i] = 0.5 * (kp.v[i] - km.v[i]);
        kf.k2.v[i] = 0.5 * (kp.v[i] + km.v[i]) - kf.k0.v[i];
    }
    return kf;
}

T4 curvature_at(const CurvatureFamily& kf, double t) {
    T4 k(kf.d);
    for (std::size_t i = 0; i < k.v.size(); ++i)
        k.v[i] = kf.k0.v[i] + t * kf.k1.v[i] + t * t * kf.k2.v[i];
    return k;
}

namespace {

std::vector<Cx> contract_kmix(const T4& k, const MatC& U, int n) {
    const int d = k.d;
    // stepwise: conj on slots 1 and 4
    std::vector<Cx> s1(std::size_t(n) * d * d * d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    Cx acc = 0;
                    for (int a = 0; a < d; ++a) acc += std::conj(U(a, i)) * k.at(a, b, c, e);
                    s1[((std::size_t(i) * d + b) * d + c) * d + e] = acc;
                }
    std::vector<Cx> s2(std::size_t(n) * n * d * d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    Cx acc = 0;
                    for (int b = 0; b < d; ++b)
                        acc += U(b, j) * s1[((std::size_t(i) * d + b) * d + c) * d + e];
                    s2[((std::size_t(i) * n + j) * d + c) * d + e] = acc;
                }
    std::vector<Cx> s3(std::size_t(n) * n * n * d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk)
                for (int e = 0; e < d; ++e) {
                    Cx acc = 0;
                    for (int c = 0; c < d; ++c)
                        acc += U(c, kk) * s2[((std::size_t(i) * n + j) * d + c) * d + e];
                    s3[((std::size_t(i) * n + j) * n + kk) * d + e] = acc;
                }
    std::vector<Cx> out(std::size_t(n) * n * n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk)
                for (int l = 0; l < n; ++l) {
                    Cx acc = 0;
                    for (int e = 0; e < d; ++e)
                        acc += std::conj(U(e, l)) *
                               s3[((std::size_t(i) * n + j) * n + kk) * d + e];
                    out[((std::size_t(i) * n + j) * n + kk) * n + l] = acc;
                }
    return out;
}

CForm contract_rho1(const T4& k, const MatC& U, int n) {
    const int d = k.d;
    const Cx I(0, 1);
    CForm rho(d, 2, Basis::Coordinate);
    const auto& pairs = combs(d, 2).list;
    for (std::size_t o = 0; o < pairs.size(); ++o) {
        int c = pairs[o][0], e = pairs[o][1];
        Cx acc = 0;
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    acc += std::conj(U(a, i)) * U(b, i) * k.at(a, b, c, e);
        rho.c[o] = I * acc;
    }
    return rho;
}

} // namespace

CurvatureContractions contract_curvature(const CurvatureFamily& kf, const Frame& fr) {
    CurvatureContractions cc;
    cc.n = kf.n;
    const T4* ks[3] = {&kf.k0, &kf.k1, &kf.k2};
    for (int q = 0; q < 3; ++q) {
        cc.kmix[q] = contract_kmix(*ks[q], fr.U, kf.n);
        cc.rho1[q] = contract_rho1(*ks[q], fr.U, kf.n);
    }
    return cc;
}

std::vector<Cx> kmix_at(const CurvatureContractions& cc, double t) {
    std::vector<Cx> out(cc.kmix[0].size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = cc.kmix[0][i] + t * cc.kmix[1][i] + t * t * cc.kmix[2][i];
    return out;
}

std::pair<Form, double> rho1_at(const CurvatureContractions& cc, double t) {
    CForm rho = cc.rho1[0] + cc.rho1[1] * t + cc.rho1[2] * (t * t);
    Form re = real_part(rho);
    double imag = 0;
    for (const auto& x : rho.c) imag = std::max(imag, std::abs(x.imag()));
    return {re, imag};
}

ScalarsT scalar_curvatures(const std::vector<Cx>& kmix, int n) {
    Cx s1 = 0, s2 = 0;
    auto at = [&](int i, int j, int k, int l) {
        return kmix[((std::size_t(i) * n + j) * n + k) * n + l];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s1 += at(i, i, j, j);
            s2 += at(i, j, i, j);
        }
    ScalarsT r;
    r.s1 = s1.real();
    r.s2 = s2.real();
    r.imag_residual = std::max(std::abs(s1.imag()), std::abs(s2.imag()));
    return r;
}

double s1_closed_form(const NormBundle& nb, double s, double t, int n) {
    if (n < 2) throw DomainError("closed forms need n >= 2");
    return s / 2 - 5.0 / 12.0 * nb.nsq_dF_minus + nb.nsq_N0 / 16.0 +
           0.25 * nb.nsq_dF0_plus +
           (1.0 / (4.0 * (n - 1)) + (t - 1) / 2.0) * nb.nsq_lee +
           (t - 2) / 2.0 * nb.delta_lee;
}

double s2_closed_form(const NormBundle& nb, double s, double t, int n) {
    if (n < 2) throw DomainError("closed forms need n >= 2");
    double q = t * t - 2 * t;
    return s / 2 - nb.nsq_dF_minus / 12.0 + nb.nsq_N0 / 32.0 - q / 4.0 * nb.nsq_dF0_plus -
           (q / (4.0 * (n - 1)) + (t + 1) * (t + 1) / 8.0) * nb.nsq_lee -
           (t + 1) / 2.0 * nb.delta_lee;
}

std::pair<double, double> lichnerowicz_scalars_sj(const NormBundle& nb, double s, double s_J,
                                                  int n) {
    if (n < 2) throw DomainError("closed forms need n >= 2");
    double s1 = 0.5 * s_J + 0.25 * nb.nsq_dF_plus - nb.nsq_dF_minus / 12.0 - nb.nsq_N0 / 16.0;
    double s2 = 0.25 * (s_J + s) +
                (nb.nsq_lee - (nb.nsq_nablaF - nb.nsq_dF)) / 8.0;
    return {s1, s2};
}

double s1_shift(double s1_0, const NormBundle& nb, double t) {
    return s1_0 + t / 2.0 * (nb.nsq_lee + nb.delta_lee);
}

double s2_shift(double s2_0, const NormBundle& nb, double t) {
    double q = t * t - 2 * t;
    return s2_0 - t / 2.0 * (nb.nsq_lee + nb.delta_lee) - q / 4.0 * nb.nsq_dF_plus -
           q / 8.0 * nb.nsq_lee;
}

double s1_hermitian_closed(const NormBundle& nb, double s, double t) {
    return s / 2 + 0.25 * nb.nsq_dF + (t - 1) / 2.0 * nb.nsq_lee +
           (t - 2) / 2.0 * nb.delta_lee;
}

double s2_hermitian_closed(const NormBundle& nb, double s, double t) {
    double q = t * t - 2 * t;
    return s / 2 - q / 4.0 * nb.nsq_dF - (t + 1) * (t + 1) / 8.0 * nb.nsq_lee -
           (t + 1) / 2.0 * nb.delta_lee;
}

double s1_surface_closed(const NormBundle& nb, double s, double t) {
    return s / 2 + nb.nsq_N / 16.0 + (2 * t - 1) / 4.0 * nb.nsq_lee +
           (t - 2) / 2.0 * nb.delta_lee;
}

double s2_surface_closed(const NormBundle& nb, double s, double t) {
    return s / 2 + nb.nsq_N / 32.0 - (3 * t * t - 2 * t + 1) / 8.0 * nb.nsq_lee -
           (t + 1) / 2.0 * nb.delta_lee;
}

double bismut_difference(const NormBundle& nb) {
    return nb.nsq_dF - nb.nsq_lee - 1.5 * nb.delta_lee;
}

double chern_difference(const NormBundle& nb) {
    return 0.5 * nb.nsq_lee + 0.5 * nb.delta_lee;
}

double lichnerowicz_split_residual(const T4& k0, const T4& r_coord, const StructureJets& sj,
                                   const std::vector<Jet>& nJ) {
    const int d = k0.d;
    MatD J = values_of(sj.J), h = values_of(sj.h);
    // lowered nabla J: ip(c, a, e, b) building blocks
    double res = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    double rjj = 0;
                    for (int x = 0; x < d; ++x)
                        for (int y = 0; y < d; ++y)
                            rjj += J(x, a) * J(y, b) * r_coord.at(x, y, c, e);
                    double ip1 = 0, ip2 = 0;
                    for (int x = 0; x < d; ++x)
                        for (int y = 0; y < d; ++y) {
                            ip1 += h(x, y) * nj_at(nJ, d, c, x, a).value *
                                   nj_at(nJ, d, e, y, b).value;
                            ip2 += h(x, y) * nj_at(nJ, d, e, x, a).value *
                                   nj_at(nJ, d, c, y, b).value;
                        }
                    double rhs = 0.5 * (r_coord.at(a, b, c, e) + rjj) + 0.25 * (ip1 - ip2);
                    res = std::max(res, std::abs(k0.at(a, b, c, e) - rhs));
                }
    return res;
}

Form rho1_zero_correction(const StructureJets& sj, const std::vector<Jet>& nJ,
                          const MetricJets& mj) {
    const int d = 2 * sj.n;
    MatD J = values_of(sj.J), h = values_of(sj.h), hinv = values_of(mj.hinv);
    // L(f, c, a) = h_{gf} J^g_e (nabla_c J)^e_a
    T3 L(d);
    for (int f = 0; f < d; ++f)
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a) {
                double acc = 0;
                for (int g = 0; g < d; ++g)
                    for (int e = 0; e < d; ++e)
                        acc += h(g, f) * J(g, e) * nj_at(nJ, d, c, e, a).value;
                L.at(f, c, a) = acc;
            }
    Form S(d, 2, Basis::Coordinate);
    const auto& pairs = combs(d, 2).list;
    for (std::size_t o = 0; o < pairs.size(); ++o) {
        int c = pairs[o][0], e = pairs[o][1];
        double scd = 0, sdc = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                double w = hinv(a, b);
                if (w == 0) continue;
                for (int f = 0; f < d; ++f) {
                    scd += w * L.at(f, c, a) * nj_at(nJ, d, e, f, b).value;
                    sdc += w * L.at(f, e, a) * nj_at(nJ, d, c, f, b).value;
                }
            }
        // skew analytically; symmetrize away the rounding part
        S.c[o] = 0.25 * 0.5 * (scd - sdc);
    }
    return S;
}

RicciForms ricci_forms(const std::vector<Cx>& kmix, int n) {
    RicciForms rf{MatC(n, n, 0.0), MatC(n, n, 0.0), MatC(n, n, 0.0), MatC(n, n, 0.0)};
    auto at = [&](int i, int j, int k, int l) {
        return kmix[((std::size_t(i) * n + j) * n + k) * n + l];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                rf.r1(i, j) += at(k, k, i, j);
                rf.r2(i, j) += at(j, i, k, k);
                rf.r3(i, j) += at(k, i, k, j);
                rf.r4(i, j) += at(j, k, i, k);
            }
    return rf;
}

double rho11_identity_residual(const FullPoint& fp, double t) {
    if (fp.g.nb.nsq_N >= 1e-14)
        throw StructureError("the (1,1) Chern form identity needs an integrable J");
    MatD Jv = values_of(fp.g.sj.J);
    Form rhot = rho1_at(fp.cc, t).first;
    Form lhs = (rhot + j_action(rhot, Jv)) * 0.5;
    Form dd = fp.g.lp.ddeltaF;
    Form rhs = rho1_at(fp.cc, 1.0).first + (dd + j_action(dd, Jv)) * ((t - 1.0) / 4.0);
    return max_abs_diff(lhs, rhs);
}

FullPoint analyze_full(const Manifold& m, const ChartPoint& p) {
    FullPoint fp;
    fp.g = analyze_point(m, p);
    fp.cf = connection_family(fp.g.sj, fp.g.mj, fp.g.gamma, fp.g.nJ);
    fp.kf = curvature_family(fp.cf, fp.g.mj);
    fp.cc = contract_curvature(fp.kf, fp.g.fr);
    fp.ct = chern_torsion(fp.cf, fp.g.sj, fp.g.fr);
    return fp;
}

Form ricci_form_to_frame(const MatC& r, int n) {
    const Cx I(0, 1);
    CForm w(2 * n, 2, Basis::Unitary);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int idx[2] = {a, n + b};
            w.add(idx, I * r(a, b));
        }
    return from_unitary(w, n);
}

} // namespace ahg
