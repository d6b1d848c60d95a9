#pragma once

#include "ahg/forms.hpp"
#include "ahg/frame.hpp"
#include "ahg/manifold.hpp"
#include "ahg/tensors.hpp"

namespace ahg {

/// Levi-Civita connection coefficients Gamma^C_{AB}, one jet order below the
/// metric jets.
struct Christoffel {
    int d = 0;
    std::vector<Jet> g; // [C][A][B]
    Jet& at(int c, int a, int b) { return g[(std::size_t(c) * d + a) * d + b]; }
    const Jet& at(int c, int a, int b) const { return g[(std::size_t(c) * d + a) * d + b]; }
};

Christoffel christoffel(const MetricJets& mj);

/// Residual of d h_{AB} against its Gamma reconstruction (values).
double metric_compat_residual(const MetricJets& mj, const Christoffel& gamma);

/// Riemann tensor values in coordinates, stored in the slot order where the
/// first two arguments are the endomorphism pair:
///   R(A,B,C,D) = < e_A, (D_C D_D - D_D D_C) e_B >.
/// The unit round sphere then has R(A,B,A,B) = +1 and curvature operator
/// equal to the identity on 2-forms.
T4 riemann_coord(const MetricJets& mj, const Christoffel& gamma);

/// (nabla_C J)^A_B as jets (one order below the structure jets).
std::vector<Jet> nabla_j(const StructureJets& sj, const Christoffel& gamma);
inline const Jet& nj_at(const std::vector<Jet>& nj, int d, int c, int a, int b) {
    return nj[(std::size_t(c) * d + a) * d + b];
}

/// (nabla_A F)(B, C) values in coordinates, from nabla J and h.
T3 nabla_f_coord(const StructureJets& sj, const std::vector<Jet>& nj);

MatD ricci_frame(const T4& r_frame);
double scalar_s(const MatD& ric);

/// J-twisted Ricci: Ric_J(X, Y) = R(e_A, X, J e_A, J Y) in the frame, where
/// J acts as the standard block rotation.
MatD j_ricci_frame(const T4& r_frame, int n);
double scalar_sJ(const MatD& ricj);

/// Curvature operator applied to a frame 2-form.
Form curvature_op(const T4& r_frame, const Form& w);

/// J-Ricci 2-form, both as -Ric_J(X, JY) and as the curvature operator image
/// of F; these agree and the suite checks it.
Form rho_j_from_ricci(const MatD& ricj, int n);

/// Weyl part of the curvature in the frame basis.
T4 weyl_frame(const T4& r_frame, const MatD& ric, double s);

/// <W(F), F> with F the frame fundamental form.
double weyl_contract_f(const T4& w_frame, const Form& f_frame);

/// Max violation of the pair/antisymmetry/first-Bianchi symmetries.
double riemann_symmetry_residual(const T4& r_frame);

} // namespace ahg
