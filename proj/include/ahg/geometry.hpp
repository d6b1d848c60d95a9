#pragma once

#include "ahg/hermitian.hpp"
#include "ahg/manifold.hpp"
#include "ahg/riemann.hpp"

namespace ahg {

/// Everything the identity suites consume at a single chart point.
struct PointGeometry {
    const Manifold* manifold = nullptr;
    ChartPoint p;
    int n = 0, d = 0;

    StructureJets sj; // order-2 jets of h, J
    MetricJets mj;    // inverse, sqrt(det), orientation
    Frame fr;

    Christoffel gamma;
    std::vector<Jet> nJ; // (nabla_C J)^A_B jets
    T3 nablaF_fr;        // (nabla_X F)(Y, Z) frame values
    T4 R_coord;          // Riemann tensor, coordinate components
    T4 R_fr;             // same, frame components

    MatD ric, ricj;
    ScalarPack sp;
    Form rho_j;   // -Ric_J(X, JY), frame 2-form
    Form rho_j_op; // curvature operator applied to F (the other route)

    LeePipeline lp;
    Decomposition dec;
    NormBundle nb;

    double dv_residual = 0; // | (F^n/n!) top coefficient - orient*sqrt(det h) |
};

PointGeometry analyze_point(const Manifold& m, const ChartPoint& p);

/// Orientation sign of the coordinate chart against F^n/n! (computed from
/// structure values at the point).
double chart_orientation(const StructureJets& sj);

} // namespace ahg
