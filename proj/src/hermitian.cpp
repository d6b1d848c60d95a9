#include "ahg/hermitian.hpp"

#include <cmath>

namespace ahg {

JetForm fundamental_form_jets(const StructureJets& sj) {
    const int d = 2 * sj.n;
    const int order = sj.h(0, 0).order;
    JetForm F(d, 2, Basis::Coordinate, jet_const(d, order, 0.0));
    const auto& pairs = combs(d, 2).list;
    for (std::size_t o = 0; o < pairs.size(); ++o) {
        int a = pairs[o][0], b = pairs[o][1];
        Jet acc = jet_const(d, order, 0.0);
        for (int e = 0; e < d; ++e) acc = acc + sj.J(e, a) * sj.h(e, b);
        F.c[o] = acc;
    }
    return F;
}

T3 nijenhuis_coord(const StructureJets& sj) {
    const int d = 2 * sj.n;
    T3 N(d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                double v = 0;
                for (int e = 0; e < d; ++e) {
                    v += sj.J(c, e).value * (sj.J(e, b).g(a) - sj.J(e, a).g(b));
                    v += -sj.J(e, a).value * sj.J(c, b).g(e) +
                         sj.J(e, b).value * sj.J(c, a).g(e);
                }
                N.at(c, a, b) = v;
                N.at(c, b, a) = -v;
            }
    return N;
}

T3 nijenhuis_lowered(const StructureJets& sj, const T3& n_up) {
    const int d = 2 * sj.n;
    T3 low(d);
    for (int u = 0; u < d; ++u)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                double v = 0;
                for (int c = 0; c < d; ++c) v += sj.h(u, c).value * n_up.at(c, a, b);
                low.at(u, a, b) = v;
            }
    return low;
}

Form f_trace(const Form& psi, const Form& f) {
    const int d = psi.dim;
    Form out(d, 1, Basis::Frame);
    const auto& pairs = combs(d, 2).list;
    for (int x = 0; x < d; ++x) {
        double acc = 0;
        for (std::size_t o = 0; o < pairs.size(); ++o) {
            int idx[3] = {x, pairs[o][0], pairs[o][1]};
            acc += psi.get(idx) * f.c[o];
        }
        out.c[x] = acc;
    }
    return out;
}

LeePipeline lee_pipeline(const StructureJets& sj, const MetricJets& mj) {
    const int d = 2 * sj.n;
    LeePipeline lp;
    lp.F_jets = fundamental_form_jets(sj);
    lp.dF_jets = extd(lp.F_jets);
    lp.deltaF_jets = codifferential(lp.F_jets, mj);
    // alpha = J(delta F); on 1-forms (J phi)(X) = -phi(JX)
    lp.lee_jets = JetForm(d, 1, Basis::Coordinate, jet_const(d, lp.deltaF_jets.zero.order, 0.0));
    for (int a = 0; a < d; ++a) {
        Jet acc = jet_const(d, lp.deltaF_jets.c[0].order, 0.0);
        for (int b = 0; b < d; ++b) acc = acc - lp.deltaF_jets.c[b] * sj.J(b, a);
        lp.lee_jets.c[a] = acc;
    }
    lp.ddeltaF = values_of(extd(lp.deltaF_jets));
    lp.delta_lee = codifferential(lp.lee_jets, mj).c[0].value;
    return lp;
}

Decomposition decompose(const StructureJets& sj, const MetricJets&, const Frame& fr,
                        const LeePipeline& lp) {
    const int n = sj.n;
    const int d = 2 * n;
    Decomposition dec;
    dec.n = n;
    dec.F = to_frame(values_of(lp.F_jets), fr);
    dec.dF = to_frame(values_of(lp.dF_jets), fr);
    dec.lee = to_frame(values_of(lp.lee_jets), fr);

    CForm wu = to_unitary(dec.dF, n);
    CForm minus = pq_select(wu, 3, 0, n) + pq_select(wu, 0, 3, n);
    CForm plus = pq_select(wu, 2, 1, n) + pq_select(wu, 1, 2, n);
    dec.dF_minus = from_unitary(minus, n);
    dec.dF_plus = from_unitary(plus, n);
    dec.lee_from_trace = f_trace(dec.dF, dec.F);
    if (n >= 2)
        dec.dF_plus_primitive = dec.dF_plus - wedge(dec.lee, dec.F) * (1.0 / (n - 1));

    T3 n_up = nijenhuis_coord(sj);
    T3 n_low_coord = nijenhuis_lowered(sj, n_up);
    dec.N_low = to_frame(n_low_coord, fr.E);
    dec.bN = Form(d, 3, Basis::Frame);
    const auto& triples = combs(d, 3).list;
    for (std::size_t o = 0; o < triples.size(); ++o) {
        int x = triples[o][0], y = triples[o][1], z = triples[o][2];
        dec.bN.c[o] =
            (dec.N_low.at(x, y, z) + dec.N_low.at(y, z, x) + dec.N_low.at(z, x, y)) / 3.0;
    }
    dec.N0 = dec.N_low;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                int idx[3] = {x, y, z};
                dec.N0.at(x, y, z) -= dec.bN.get(idx);
            }
    return dec;
}

double vector_valued_norm_sq(const T3& t) {
    const int d = t.d;
    double s = 0;
    for (int u = 0; u < d; ++u)
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) s += t.at(u, a, b) * t.at(u, a, b);
    return s;
}

NormBundle norms(const Decomposition& dec, const T3& nablaF_frame, double delta_lee) {
    NormBundle nb;
    nb.nsq_dF = norm_sq(dec.dF);
    nb.nsq_dF_minus = norm_sq(dec.dF_minus);
    nb.nsq_dF_plus = norm_sq(dec.dF_plus);
    nb.nsq_dF0_plus = dec.n >= 2 ? norm_sq(dec.dF_plus_primitive) : 0.0;
    nb.nsq_lee = norm_sq(dec.lee);
    nb.nsq_N = vector_valued_norm_sq(dec.N_low);
    nb.nsq_N0 = vector_valued_norm_sq(dec.N0);
    nb.nsq_nablaF = vector_valued_norm_sq(nablaF_frame);
    nb.delta_lee = delta_lee;
    return nb;
}

double nabla_f_from_df_n_residual(const T3& nf, const Decomposition& dec) {
    const int d = nf.d, n = dec.n;
    double res = 0;
    for (int x = 0; x < d; ++x) {
        auto [jx, sx] = j_index(x, n);
        for (int y = 0; y < d; ++y) {
            auto [jy, sy] = j_index(y, n);
            for (int z = 0; z < d; ++z) {
                auto [jz, sz] = j_index(z, n);
                int idx[3] = {x, y, z};
                int jidx[3] = {x, jy, jz};
                double rhs = 0.5 * (dec.dF.get(idx) - sy * sz * dec.dF.get(jidx) -
                                    sx * dec.N_low.at(jx, y, z));
                res = std::max(res, std::abs(nf.at(x, y, z) - rhs));
            }
        }
    }
    return res;
}

double nabla_f_reconstruction_residual(const T3& nf, const Decomposition& dec) {
    const int d = nf.d, n = dec.n;
    double res = 0;
    for (int x = 0; x < d; ++x) {
        auto [jx, sx] = j_index(x, n);
        for (int y = 0; y < d; ++y) {
            auto [jy, sy] = j_index(y, n);
            for (int z = 0; z < d; ++z) {
                auto [jz, sz] = j_index(z, n);
                int idx[3] = {x, y, z};
                int jidx[3] = {x, jy, jz};
                double rhs = dec.dF_minus.get(idx) - 0.5 * sx * dec.N_low.at(jx, y, z) +
                             0.5 * (dec.dF_plus.get(idx) - sy * sz * dec.dF_plus.get(jidx));
                res = std::max(res, std::abs(nf.at(x, y, z) - rhs));
            }
        }
    }
    return res;
}

double nabla_f_symmetry_residual(const T3& nf, int n) {
    const int d = nf.d;
    double res = 0;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            auto [jy, sy] = j_index(y, n);
            for (int z = 0; z < d; ++z) {
                auto [jz, sz] = j_index(z, n);
                res = std::max(res, std::abs(nf.at(x, y, z) + nf.at(x, z, y)));
                res = std::max(res, std::abs(nf.at(x, y, z) + sy * sz * nf.at(x, jy, jz)));
            }
        }
    return res;
}

double scalar_defect_residual(const ScalarPack& sp, const NormBundle& nb) {
    double rhs = 2.0 / 3.0 * nb.nsq_dF_minus - 0.25 * nb.nsq_N0 + nb.nsq_lee +
                 2.0 * nb.delta_lee;
    return std::abs((sp.s - sp.s_J) - rhs);
}

std::string gray_hervella_label(double w1, double w2, double w3, double w4, double tol) {
    std::string label;
    auto append = [&](const char* name, double v) {
        if (v > tol) {
            if (!label.empty()) label += "+";
            label += name;
        }
    };
    append("W1", w1);
    append("W2", w2);
    append("W3", w3);
    append("W4", w4);
    return label.empty() ? "Kahler" : label;
}

} // namespace ahg
