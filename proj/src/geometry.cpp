#include "ahg/geometry.hpp"

#include <cmath>

namespace ahg {

double chart_orientation(const StructureJets& sj) {
    const int n = sj.n;
    Form F = values_of(fundamental_form_jets(sj));
    Form top = wedge_power(F, n);
    double coeff = top.c[0];
    double fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    return (coeff / fact) >= 0 ? 1.0 : -1.0;
}

PointGeometry analyze_point(const Manifold& m, const ChartPoint& p) {
    PointGeometry g;
    g.manifold = &m;
    g.p = p;
    g.n = m.n;
    g.d = 2 * m.n;
    g.sj = m.eval(p, 2);

    MatD hv = values_of(g.sj.h), Jv = values_of(g.sj.J);
    g.fr = build_adapted_frame(hv, Jv);

    double orient = chart_orientation(g.sj);
    g.mj = make_metric_jets(g.sj.h, orient);

    // dv = F^n / n! against the oriented coordinate measure
    Form F = values_of(fundamental_form_jets(g.sj));
    Form top = wedge_power(F, g.n);
    double fact = 1;
    for (int k = 2; k <= g.n; ++k) fact *= k;
    g.dv_residual = std::abs(top.c[0] / fact - orient * g.mj.sqrt_det.value);

    g.gamma = christoffel(g.mj);
    g.nJ = nabla_j(g.sj, g.gamma);
    g.nablaF_fr = to_frame(nabla_f_coord(g.sj, g.nJ), g.fr.E);
    g.R_coord = riemann_coord(g.mj, g.gamma);
    g.R_fr = to_frame(g.R_coord, g.fr.E);

    g.ric = ricci_frame(g.R_fr);
    g.ricj = j_ricci_frame(g.R_fr, g.n);
    g.sp.s = scalar_s(g.ric);
    g.sp.s_J = scalar_sJ(g.ricj);
    g.rho_j = rho_j_from_ricci(g.ricj, g.n);

    g.lp = lee_pipeline(g.sj, g.mj);
    g.dec = decompose(g.sj, g.mj, g.fr, g.lp);
    g.rho_j_op = curvature_op(g.R_fr, g.dec.F);
    g.nb = norms(g.dec, g.nablaF_fr, g.lp.delta_lee);

    T4 W = weyl_frame(g.R_fr, g.ric, g.sp.s);
    g.sp.weyl_F = weyl_contract_f(W, g.dec.F);
    return g;
}

} // namespace ahg
