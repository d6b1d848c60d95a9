#pragma once

#include <complex>

#include "ahg/forms.hpp"
#include "ahg/linalg.hpp"
#include "ahg/manifold.hpp"

namespace ahg {

/// J-adapted orthonormal frame {e_1..e_n, e_{n+i} = J e_i} at a point,
/// stored as coordinate columns, together with the derived unitary frame
/// u_i = (e_i - sqrt(-1) e_{n+i}) / sqrt(2).
struct Frame {
    int n = 0;
    MatD E; // 2n x 2n, column A = coordinates of e_A
    MatC U; // 2n x n, column i = coordinates of u_i
    MatC W; // 2n x 2n, [U | conj(U)]
};

/// Deterministic construction: coordinate basis candidates in index order,
/// h-projected off the span of accepted pairs, normalized, then paired with
/// their J image.  Candidates whose projection norm falls below 1e-8 are
/// skipped.  Validates J^2 = -I and h(J., J.) = h(...) to 1e-10 first.
Frame build_adapted_frame(const MatD& h, const MatD& J);

/// Same construction from an explicit candidate list (testing hook).
Frame build_adapted_frame(const MatD& h, const MatD& J, const std::vector<std::vector<double>>& candidates);

/// J in the adapted frame basis is exactly the standard block rotation.
MatD j0_block(int n);

/// Complex 2n x 2n change of basis from the W = (u, conj u) basis back to
/// the real frame basis; pullback with it converts W-components to frame
/// components.
MatC frame_from_w_matrix(int n);

/// Constant matrix expressing u_i, conj(u_i) in the real frame basis;
/// pullback with it converts frame components to W-components.
MatC w_from_frame_matrix(int n);

/// Convert coordinate-basis component values to adapted-frame components.
Form to_frame(const Form& coord_form, const Frame& f);
CForm to_frame(const CForm& coord_form, const Frame& f);

/// Frame components -> unitary (W-basis) components.
CForm to_unitary(const Form& frame_form, int n);
/// Unitary components -> real part expressed on the real frame.
Form from_unitary(const CForm& wform, int n);

/// Zero out every component whose bidegree is not (p, q); W-basis combos
/// with p indices below n and q at or above n.
CForm pq_select(const CForm& wform, int p, int q, int n);

} // namespace ahg
