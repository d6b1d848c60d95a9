#pragma once

#include <complex>

#include "ahg/geometry.hpp"

namespace ahg {

/// Coefficients of the canonical Hermitian connection family in coordinates,
/// affine in the parameter: A(t) = base + t * corr, both order-1 jets.
/// D^t_{d_A} d_B = A(t)^C_{AB} d_C.
struct ConnectionFamily {
    int d = 0, n = 0;
    std::vector<Jet> base; // [C][A][B]
    std::vector<Jet> corr;
    const Jet& base_at(int c, int a, int b) const {
        return base[(std::size_t(c) * d + a) * d + b];
    }
    const Jet& corr_at(int c, int a, int b) const {
        return corr[(std::size_t(c) * d + a) * d + b];
    }
    double coeff(int c, int a, int b, double t) const {
        return base_at(c, a, b).value + t * corr_at(c, a, b).value;
    }
};

ConnectionFamily connection_family(const StructureJets& sj, const MetricJets& mj,
                                   const Christoffel& gamma, const std::vector<Jet>& nJ);

/// D^t h = 0 residual (values).
double connection_metric_residual(const ConnectionFamily& cf, const MetricJets& mj, double t);
/// D^t J = 0 residual (values).
double connection_j_residual(const ConnectionFamily& cf, const StructureJets& sj, double t);

/// Torsion values T^C_{AB} = A^C_{AB} - A^C_{BA} at parameter t.
T3 torsion_t(const ConnectionFamily& cf, double t);

/// Chern torsion components over the unitary frame:
/// holo(i,j,k) = T^i_{jk}, anti(i,j,k) = T^i_{jbar kbar}.
struct ChernTorsion {
    int n = 0;
    std::vector<std::complex<double>> holo;
    std::vector<std::complex<double>> anti;
    double mixed_residual = 0; // (1,1) block, must vanish for t = 1
    std::complex<double> h(int i, int j, int k) const {
        return holo[(std::size_t(i) * n + j) * n + k];
    }
    std::complex<double> a(int i, int j, int k) const {
        return anti[(std::size_t(i) * n + j) * n + k];
    }
};

ChernTorsion chern_torsion(const ConnectionFamily& cf, const StructureJets& sj,
                           const Frame& fr);

/// Complex components <N(u_ibar, u_jbar), u_kbar> of the Nijenhuis tensor.
std::vector<std::complex<double>> nijenhuis_unitary(const StructureJets& sj, const Frame& fr);

/// Difference tensor gamma = D^0 - D^1 contracted into the unitary frame;
/// returns the residual against its torsion reconstruction.
double connection_difference_residual(const ConnectionFamily& cf, const StructureJets& sj,
                                      const Frame& fr, const ChernTorsion& ct);

/// Curvature of D^t in the same slot order as the Riemann tensor,
/// K(t) = K0 + t K1 + t^2 K2 (coordinate components).
struct CurvatureFamily {
    int d = 0, n = 0;
    T4 k0, k1, k2;
};

CurvatureFamily curvature_family(const ConnectionFamily& cf, const MetricJets& mj);

T4 curvature_at(const CurvatureFamily& kf, double t);

/// Contractions of the curvature family into the unitary frame, kept as
/// quadratic coefficients so any t evaluates cheaply.
struct CurvatureContractions {
    int n = 0;
    // kmix[q][(i,j,k,l)] = t^q coefficient of K(u_ibar, u_j, u_k, u_lbar)
    std::vector<std::complex<double>> kmix[3];
    // first Chern form coefficients: rho1(t) = i * sum_i K(u_ibar, u_i, ., .)
    CForm rho1[3]; // coordinate basis, complex
    std::complex<double> kmix_at(int q, int i, int j, int k, int l) const {
        return kmix[q][((std::size_t(i) * n + j) * n + k) * n + l];
    }
};

CurvatureContractions contract_curvature(const CurvatureFamily& kf, const Frame& fr);

/// The mixed block K(u_ibar, u_j, u_k, u_lbar) at parameter t.
std::vector<std::complex<double>> kmix_at(const CurvatureContractions& cc, double t);

/// First Chern form at parameter t (coordinate components) and the size of
/// its imaginary part (a reality check).
std::pair<Form, double> rho1_at(const CurvatureContractions& cc, double t);

/// Contraction-defined Hermitian scalar curvatures; .second is the imaginary
/// residue of the traces.
struct ScalarsT {
    double s1 = 0, s2 = 0;
    double imag_residual = 0;
};
ScalarsT scalar_curvatures(const std::vector<std::complex<double>>& kmix, int n);

/// Closed forms of the two Hermitian scalar curvatures for any t.
double s1_closed_form(const NormBundle& nb, double s, double t, int n);
double s2_closed_form(const NormBundle& nb, double s, double t, int n);

/// t = 0 values through the s_J route; pairs (s1(0), s2(0)).
std::pair<double, double> lichnerowicz_scalars_sj(const NormBundle& nb, double s, double s_J,
                                                  int n);

/// Family shift identities: s1(t) = s1(0) + (t/2)(|lee|^2 + delta lee), and
/// the quadratic companion for s2.
double s1_shift(double s1_0, const NormBundle& nb, double t);
double s2_shift(double s2_0, const NormBundle& nb, double t);

/// Specializations: integrable members and surfaces.
double s1_hermitian_closed(const NormBundle& nb, double s, double t);
double s2_hermitian_closed(const NormBundle& nb, double s, double t);
double s1_surface_closed(const NormBundle& nb, double s, double t);
double s2_surface_closed(const NormBundle& nb, double s, double t);

/// s1(-1) - s2(-1) and s1(1) - s2(1) for integrable members.
double bismut_difference(const NormBundle& nb);
double chern_difference(const NormBundle& nb);

/// Residual of the split of K^0 into the J-symmetrized Riemann part and the
/// nabla J correction (full coordinate tensors).
double lichnerowicz_split_residual(const T4& k0, const T4& r_coord, const StructureJets& sj,
                                   const std::vector<Jet>& nJ);

/// The correction 2-form whose sum with the J-Ricci form gives rho1(0):
/// S(X, Y) = (1/4) <J (nabla_X J) e_A, (nabla_Y J) e_A>.
Form rho1_zero_correction(const StructureJets& sj, const std::vector<Jet>& nJ,
                          const MetricJets& mj);

/// Ricci form coefficient matrices over theta^i wedge conj(theta^j).
struct RicciForms {
    MatC r1, r2, r3, r4;
};
RicciForms ricci_forms(const std::vector<std::complex<double>>& kmix, int n);

/// Real frame 2-form of a (1,1) coefficient matrix sqrt(-1) r_ij.
Form ricci_form_to_frame(const MatC& r, int n);

/// Residual of the (1,1)-projected first Chern form against its t = 1
/// reconstruction; only defined for integrable structures (StructureError
/// otherwise).
double rho11_identity_residual(const struct FullPoint& fp, double t);

/// One-stop bundle: point geometry plus the whole connection family pipeline.
struct FullPoint {
    PointGeometry g;
    ConnectionFamily cf;
    CurvatureFamily kf;
    CurvatureContractions cc;
    ChernTorsion ct;
};

FullPoint analyze_full(const Manifold& m, const ChartPoint& p);

} // namespace ahg
