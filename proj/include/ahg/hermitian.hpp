#pragma once

#include <string>

#include "ahg/forms.hpp"
#include "ahg/frame.hpp"
#include "ahg/manifold.hpp"
#include "ahg/riemann.hpp"
#include "ahg/tensors.hpp"

namespace ahg {

/// Frame-index action of J (exact in an adapted frame): e_i -> e_{n+i},
/// e_{n+i} -> -e_i.
inline std::pair<int, double> j_index(int a, int n) {
    return a < n ? std::make_pair(a + n, 1.0) : std::make_pair(a - n, -1.0);
}

/// F(X, Y) = h(JX, Y) as coordinate jets.
JetForm fundamental_form_jets(const StructureJets& sj);

/// Nijenhuis tensor values N^C_{AB} in coordinates (first derivatives of J).
T3 nijenhuis_coord(const StructureJets& sj);

/// Lowered tensor <X, N(Y, Z)> in coordinates.
T3 nijenhuis_lowered(const StructureJets& sj, const T3& n_up);

/// F-trace of a 3-form: (trace psi)(X) = sum_{A<B} psi(X, e_A, e_B) F_{AB}.
Form f_trace(const Form& psi_frame, const Form& f_frame);

/// Structure decomposition at a point, all in frame components.
struct Decomposition {
    int n = 0;
    Form F;                 // fundamental 2-form
    Form dF;                // 3-form
    Form dF_minus;          // (3,0)+(0,3) part
    Form dF_plus;           // (2,1)+(1,2) part
    Form dF_plus_primitive; // dF_plus - lee ^ F / (n-1)
    Form lee;               // alpha_F = J delta F
    Form lee_from_trace;    // independent extraction from dF
    T3 N_low;               // <X, N(Y,Z)>
    Form bN;                // cyclic part of N_low (a 3-form)
    T3 N0;                  // N_low - bN
};

/// Scalar invariants.  Form norms sum over strictly increasing multi-indices;
/// tensors with a vector slot sum that slot fully.
struct NormBundle {
    double nsq_dF_minus = 0;
    double nsq_N0 = 0;
    double nsq_dF0_plus = 0;
    double nsq_lee = 0;
    double nsq_dF = 0;
    double nsq_dF_plus = 0;
    double nsq_nablaF = 0;
    double nsq_N = 0;
    double delta_lee = 0;
};

struct ScalarPack {
    double s = 0;
    double s_J = 0;
    double weyl_F = 0;
};

/// Everything the decomposition needs from the differential pipeline.
struct LeePipeline {
    JetForm F_jets;      // order 2
    JetForm dF_jets;     // order 1
    JetForm deltaF_jets; // order 1 (1-form)
    JetForm lee_jets;    // order 1 (1-form)
    Form ddeltaF;        // coordinate 2-form values of d delta F
    double delta_lee = 0;
};

LeePipeline lee_pipeline(const StructureJets& sj, const MetricJets& mj);

Decomposition decompose(const StructureJets& sj, const MetricJets& mj, const Frame& fr,
                        const LeePipeline& lp);

/// Vector-slot norm of a tensor antisymmetric in its last two slots.
double vector_valued_norm_sq(const T3& t);

NormBundle norms(const Decomposition& dec, const T3& nablaF_frame, double delta_lee);

/// Residual of the reconstruction of nabla F from dF and N.
double nabla_f_from_df_n_residual(const T3& nablaF_frame, const Decomposition& dec);
/// Residual of the four-component reconstruction of nabla F.
double nabla_f_reconstruction_residual(const T3& nablaF_frame, const Decomposition& dec);
/// Residual of the skew symmetries of nabla F.
double nabla_f_symmetry_residual(const T3& nablaF_frame, int n);

/// Scalar defect s - s_J against the component norms.
double scalar_defect_residual(const ScalarPack& sp, const NormBundle& nb);

/// Class label from component norms ("Kahler", "W1", "W2+W4", ...).
std::string gray_hervella_label(double nsq_dF_minus, double nsq_N0, double nsq_dF0_plus,
                                double nsq_lee, double tol);

} // namespace ahg
