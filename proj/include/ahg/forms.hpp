#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "ahg/jet.hpp"
#include "ahg/linalg.hpp"

namespace ahg {

enum class Basis { Coordinate, Frame, Unitary };

/// Canonical (strictly increasing) index combinations of {0..dim-1} choose k,
/// in lexicographic order, with O(k) rank lookup.
struct Combs {
    int dim = 0, k = 0;
    std::vector<std::vector<int>> list;
    int rank(std::span<const int> sorted) const;
};

const Combs& combs(int dim, int k);

/// Sort an index tuple in place; returns the permutation sign, or 0 if an
/// index repeats.
int sort_sign(std::span<int> idx);

/// Alternating k-tensor stored on strictly increasing multi-indices.
/// Component scalars may be doubles, complex, or jets; the `basis` tag
/// records which basis the component indices refer to.
template <class T>
struct KFormT {
    int dim = 0, deg = 0;
    Basis basis = Basis::Coordinate;
    std::vector<T> c;
    T zero{};

    KFormT() = default;
    KFormT(int d, int k, Basis b, T z = T{})
        : dim(d), deg(k), basis(b), c(combs(d, k).list.size(), z), zero(z) {}

    T get(std::span<const int> idx) const {
        std::vector<int> v(idx.begin(), idx.end());
        int s = sort_sign(v);
        if (s == 0) return zero;
        const T& x = c[combs(dim, deg).rank(v)];
        return s > 0 ? x : static_cast<T>(-x);
    }

    void add(std::span<const int> idx, const T& val) {
        std::vector<int> v(idx.begin(), idx.end());
        int s = sort_sign(v);
        if (s == 0) return;
        auto& slot = c[combs(dim, deg).rank(v)];
        slot = s > 0 ? slot + val : slot - val;
    }
};

using Form = KFormT<double>;
using CForm = KFormT<std::complex<double>>;
using JetForm = KFormT<Jet>;
using CJetForm = KFormT<CJet>;

template <class T>
KFormT<T> operator+(const KFormT<T>& a, const KFormT<T>& b) {
    KFormT<T> r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}
template <class T>
KFormT<T> operator-(const KFormT<T>& a, const KFormT<T>& b) {
    KFormT<T> r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    return r;
}
template <class T, class S>
KFormT<T> operator*(const KFormT<T>& a, S s) {
    KFormT<T> r = a;
    for (auto& x : r.c) x = x * s;
    return r;
}

template <class T>
KFormT<T> wedge(const KFormT<T>& a, const KFormT<T>& b) {
    if (a.dim != b.dim) throw DomainError("wedge dimension mismatch");
    if (a.deg + b.deg > a.dim) throw DomainError("wedge degree exceeds dimension");
    KFormT<T> r(a.dim, a.deg + b.deg, a.basis, a.zero);
    const auto& ca = combs(a.dim, a.deg).list;
    const auto& cb = combs(b.dim, b.deg).list;
    std::vector<int> merged(std::size_t(a.deg) + b.deg);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) {
            std::copy(ca[i].begin(), ca[i].end(), merged.begin());
            std::copy(cb[j].begin(), cb[j].end(), merged.begin() + a.deg);
            std::vector<int> v = merged;
            int s = sort_sign(v);
            if (s == 0) continue;
            auto& slot = r.c[combs(r.dim, r.deg).rank(v)];
            T term = a.c[i] * b.c[j];
            slot = s > 0 ? slot + term : slot - term;
        }
    return r;
}

template <class T>
KFormT<T> wedge_power(const KFormT<T>& a, int k) {
    if (k < 1) throw DomainError("wedge_power needs k >= 1");
    KFormT<T> r = a;
    for (int i = 1; i < k; ++i) r = wedge(r, a);
    return r;
}

inline double leading_mag_form(double x) { return std::abs(x); }
inline double leading_mag_form(const std::complex<double>& x) { return std::abs(x); }
template <class U>
double leading_mag_form(const JetT<U>&) { return 1.0; /* jets are rarely exact zeros */ }

/// Composition with a linear map on every argument slot:
/// (pullback(w, M))(v1..vk) = w(M v1, ..., M vk).  Columns of M are the
/// images of the new basis vectors, so this also converts between bases.
template <class T, class S>
auto pullback(const KFormT<T>& w, const Mat<S>& M, Basis out_basis)
    -> KFormT<decltype(w.c[0] * M(0, 0))> {
    using R = decltype(w.c[0] * M(0, 0));
    const int k = w.deg;
    R rzero = w.zero * (M(0, 0) - M(0, 0));
    KFormT<R> r(M.cols, k, out_basis, rzero);
    if (k == 0) {
        r.c[0] = w.c[0] * (M(0, 0) - M(0, 0) + 1.0);
        return r;
    }
    const auto& in = combs(w.dim, k).list;
    const auto& out = combs(M.cols, k).list;
    Mat<S> minor(k, k);
    for (std::size_t o = 0; o < out.size(); ++o) {
        R acc = rzero;
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (leading_mag_form(w.c[i]) == 0.0) continue;
            for (int r_ = 0; r_ < k; ++r_)
                for (int s_ = 0; s_ < k; ++s_) minor(r_, s_) = M(in[i][r_], out[o][s_]);
            acc = acc + w.c[i] * determinant(minor);
        }
        r.c[o] = acc;
    }
    return r;
}

/// Exterior derivative from component jets; drops the jet order by one.
template <class U>
KFormT<JetT<U>> extd(const KFormT<JetT<U>>& w) {
    if (w.basis != Basis::Coordinate) throw DomainError("extd needs coordinate components");
    for (const auto& x : w.c)
        if (x.order < 1) throw OrderError("extd needs jet order >= 1");
    const int d = w.dim, k = w.deg;
    JetT<U> z(w.zero.dim, w.zero.order >= 1 ? w.zero.order - 1 : 0);
    KFormT<JetT<U>> r(d, k + 1, Basis::Coordinate, z);
    const auto& out = combs(d, k + 1).list;
    std::vector<int> sub(k);
    for (std::size_t o = 0; o < out.size(); ++o) {
        JetT<U> acc = z;
        for (int i = 0; i <= k; ++i) {
            int pos = 0;
            for (int j = 0; j <= k; ++j)
                if (j != i) sub[pos++] = out[o][j];
            JetT<U> term = lower_to_derivative(w.get(sub), out[o][i]);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        r.c[o] = acc;
    }
    return r;
}

/// Metric data carried as jets: h, its inverse, sqrt(det h), and the sign
/// relating coordinate order to the structure orientation.
struct MetricJets {
    MatJ h;
    MatJ hinv;
    Jet sqrt_det;
    double orient = 1.0;
};

MetricJets make_metric_jets(const MatJ& h, double orient);

/// Hodge star on coordinate components; keeps the operand's jet order
/// (bounded by the metric jets' order).
JetForm hodge(const JetForm& w, const MetricJets& g);

/// Codifferential -*d* (the global sign is uniform in even dimensions).
JetForm codifferential(const JetForm& w, const MetricJets& g);

/// Inner product of equal-degree forms over an orthonormal basis
/// (strictly increasing multi-index convention).
double inner(const Form& a, const Form& b);
std::complex<double> hinner(const CForm& a, const CForm& b);
double norm_sq(const Form& a);
double norm_sq(const CForm& a);

Form values_of(const JetForm& w);
CForm values_of(const CJetForm& w);
CForm complexify(const Form& w);
CJetForm complexify(const JetForm& w);
Form real_part(const CForm& w);

/// Action of an almost complex structure on k-forms:
/// (J w)(X1..Xk) = (-1)^k w(J X1, ..., J Xk).
Form j_action(const Form& w, const MatD& J);

/// Max |component| difference, for residual checks.
double max_abs_diff(const Form& a, const Form& b);
double max_abs(const Form& a);
double max_abs(const CForm& a);

/// Bidegree projection of a complexified coordinate k-form under an almost
/// complex structure, extracted by sampling the pullback along the rotations
/// cos(theta) Id + sin(theta) J at 2k+1 angles (an exact discrete Fourier
/// split of the J-eigencomponents).  Field version keeps jets.
CJetForm pq_project_field(const CJetForm& w, const MatJ& J, int p, int q);
CForm pq_project_values(const CForm& w, const MatD& J, int p, int q);

} // namespace ahg
