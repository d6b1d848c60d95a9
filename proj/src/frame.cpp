#include "ahg/frame.hpp"

#include <cmath>

namespace ahg {

namespace {

double h_dot(const MatD& h, std::span<const double> x, std::span<const double> y) {
    double s = 0;
    for (int a = 0; a < h.rows; ++a)
        for (int b = 0; b < h.cols; ++b) s += h(a, b) * x[a] * y[b];
    return s;
}

void validate_structure(const MatD& h, const MatD& J) {
    const int d = h.rows;
    double sym = 0, jj = 0, orth = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            sym = std::max(sym, std::abs(h(a, b) - h(b, a)));
            double j2 = 0, hj = 0;
            for (int c = 0; c < d; ++c) j2 += J(a, c) * J(c, b);
            jj = std::max(jj, std::abs(j2 + (a == b ? 1.0 : 0.0)));
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) hj += J(c, a) * h(c, e) * J(e, b);
            orth = std::max(orth, std::abs(hj - h(a, b)));
        }
    if (sym > 1e-10) throw StructureError("metric is not symmetric");
    if (jj > 1e-10) throw StructureError("J^2 differs from -identity");
    if (orth > 1e-10) throw StructureError("J is not orthogonal for h");
}

} // namespace

MatD j0_block(int n) {
    MatD J(2 * n, 2 * n, 0.0);
    for (int i = 0; i < n; ++i) {
        J(n + i, i) = 1.0;
        J(i, n + i) = -1.0;
    }
    return J;
}

Frame build_adapted_frame(const MatD& h, const MatD& J,
                          const std::vector<std::vector<double>>& candidates) {
    validate_structure(h, J);
    const int d = h.rows;
    const int n = d / 2;
    if (2 * n != d) throw StructureError("odd dimension");
    std::vector<std::vector<double>> chosen;
    chosen.reserve(d);
    std::vector<std::vector<double>> first, second;
    for (const auto& cand : candidates) {
        if (int(chosen.size()) == d) break;
        std::vector<double> w(cand.begin(), cand.end());
        for (const auto& u : chosen) {
            double c = h_dot(h, w, u);
            for (int a = 0; a < d; ++a) w[a] -= c * u[a];
        }
        double nrm = std::sqrt(std::max(0.0, h_dot(h, w, w)));
        if (nrm < 1e-8) continue;
        for (double& x : w) x /= nrm;
        std::vector<double> jw(d, 0.0);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) jw[a] += J(a, b) * w[b];
        first.push_back(w);
        second.push_back(jw);
        chosen.push_back(std::move(w));
        chosen.push_back(std::move(jw));
    }
    if (int(chosen.size()) != d)
        throw DegenerateFrame("frame construction ran out of candidates");
    Frame f;
    f.n = n;
    f.E = MatD(d, d);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a) {
            f.E(a, i) = first[i][a];
            f.E(a, n + i) = second[i][a];
        }
    const std::complex<double> I(0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    f.U = MatC(d, n);
    f.W = MatC(d, d);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a) {
            f.U(a, i) = s * (f.E(a, i) - I * f.E(a, n + i));
            f.W(a, i) = f.U(a, i);
            f.W(a, n + i) = std::conj(f.U(a, i));
        }
    return f;
}

Frame build_adapted_frame(const MatD& h, const MatD& J) {
    const int d = h.rows;
    std::vector<std::vector<double>> cand(d, std::vector<double>(d, 0.0));
    for (int a = 0; a < d; ++a) cand[a][a] = 1.0;
    return build_adapted_frame(h, J, cand);
}

MatC w_from_frame_matrix(int n) {
    // columns = u_i, conj(u_i) expressed on e_A
    const std::complex<double> I(0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    MatC W(2 * n, 2 * n, 0.0);
    for (int i = 0; i < n; ++i) {
        W(i, i) = s;
        W(n + i, i) = -I * s;
        W(i, n + i) = s;
        W(n + i, n + i) = I * s;
    }
    return W;
}

MatC frame_from_w_matrix(int n) {
    // columns = e_A expressed on (u, conj u)
    const std::complex<double> I(0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    MatC V(2 * n, 2 * n, 0.0);
    for (int i = 0; i < n; ++i) {
        V(i, i) = s;
        V(n + i, i) = s;
        V(i, n + i) = I * s;
        V(n + i, n + i) = -I * s;
    }
    return V;
}

Form to_frame(const Form& coord_form, const Frame& f) {
    return pullback(coord_form, f.E, Basis::Frame);
}

CForm to_frame(const CForm& coord_form, const Frame& f) {
    MatC E(f.E.rows, f.E.cols);
    for (std::size_t i = 0; i < E.a.size(); ++i) E.a[i] = f.E.a[i];
    return pullback(coord_form, E, Basis::Frame);
}

CForm to_unitary(const Form& frame_form, int n) {
    return pullback(complexify(frame_form), w_from_frame_matrix(n), Basis::Unitary);
}

Form from_unitary(const CForm& wform, int n) {
    CForm fr = pullback(wform, frame_from_w_matrix(n), Basis::Frame);
    return real_part(fr);
}

CForm pq_select(const CForm& wform, int p, int q, int n) {
    if (p + q != wform.deg) throw DomainError("pq_select: p + q must equal the degree");
    CForm r = wform;
    const auto& cs = combs(wform.dim, wform.deg).list;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        int unbarred = 0;
        for (int x : cs[i])
            if (x < n) ++unbarred;
        if (unbarred != p) r.c[i] = 0.0;
    }
    return r;
}

} // namespace ahg
