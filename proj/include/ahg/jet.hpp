#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ahg/errors.hpp"

namespace ahg {

/// Truncated Taylor data of a scalar field at a chart point: value plus exact
/// partial derivatives up to `order` (1, 2 or 3).  Derivative tensors are
/// stored dense and fully symmetric; `hess[a*dim+b] == hess[b*dim+a]` and
/// `third` is symmetric under all index permutations by construction.
///
/// Arithmetic propagates derivatives through the Leibniz/quotient/chain rules
/// truncated at the smaller operand order.  Value and gradient slots of a
/// result are bit-identical regardless of the order they were computed at.
/// Order 0 (value only) appears as the bottom of differential-operator
/// chains; fields themselves always carry order >= 1.
template <class T>
struct JetT {
    int dim = 0;
    int order = 1;
    T value{};
    std::vector<T> grad;   // dim, present when order >= 1
    std::vector<T> hess;   // dim*dim, present when order >= 2
    std::vector<T> third;  // dim^3, present when order == 3

    JetT() = default;
    JetT(int d, int ord, T v = T{}) : dim(d), order(ord), value(v) {
        if (order >= 1) grad.assign(d, T{});
        if (order >= 2) hess.assign(std::size_t(d) * d, T{});
        if (order >= 3) third.assign(std::size_t(d) * d * d, T{});
    }

    T g(int a) const { return grad[a]; }
    T h(int a, int b) const { return hess[std::size_t(a) * dim + b]; }
    T t3(int a, int b, int c) const { return third[(std::size_t(a) * dim + b) * dim + c]; }
    T& g(int a) { return grad[a]; }
    T& h(int a, int b) { return hess[std::size_t(a) * dim + b]; }
    T& t3(int a, int b, int c) { return third[(std::size_t(a) * dim + b) * dim + c]; }
};

using Jet = JetT<double>;
using CJet = JetT<std::complex<double>>;

namespace detail {
template <class T>
inline int joint_order(const JetT<T>& a, const JetT<T>& b) {
    if (a.dim != b.dim) throw DomainError("jet dimension mismatch");
    return a.order < b.order ? a.order : b.order;
}
template <class T, class V>
inline void assign_sym3(JetT<T>& r, int i, int j, int k, const V& v) {
    r.t3(i, j, k) = v;
    r.t3(i, k, j) = v;
    r.t3(j, i, k) = v;
    r.t3(j, k, i) = v;
    r.t3(k, i, j) = v;
    r.t3(k, j, i) = v;
}
} // namespace detail

/// Constant field: value v, all derivatives zero.
template <class T>
JetT<T> jet_const(int dim, int order, T v) {
    return JetT<T>(dim, order, v);
}

/// The coordinate function x_index seeded at value x.
template <class T = double>
JetT<T> jet_coordinate(int dim, int order, int index, T x) {
    if (order < 1) throw OrderError("coordinate jets need order >= 1");
    JetT<T> j(dim, order, x);
    j.grad[index] = T(1);
    return j;
}

template <class T>
JetT<T> operator+(const JetT<T>& a, const JetT<T>& b) {
    int ord = detail::joint_order(a, b);
    JetT<T> r(a.dim, ord, a.value + b.value);
    if (ord >= 1)
        for (int i = 0; i < a.dim; ++i) r.grad[i] = a.grad[i] + b.grad[i];
    if (ord >= 2)
        for (std::size_t i = 0; i < r.hess.size(); ++i) r.hess[i] = a.hess[i] + b.hess[i];
    if (ord >= 3)
        for (std::size_t i = 0; i < r.third.size(); ++i) r.third[i] = a.third[i] + b.third[i];
    return r;
}

template <class T>
JetT<T> operator-(const JetT<T>& a, const JetT<T>& b) {
    int ord = detail::joint_order(a, b);
    JetT<T> r(a.dim, ord, a.value - b.value);
    if (ord >= 1)
        for (int i = 0; i < a.dim; ++i) r.grad[i] = a.grad[i] - b.grad[i];
    if (ord >= 2)
        for (std::size_t i = 0; i < r.hess.size(); ++i) r.hess[i] = a.hess[i] - b.hess[i];
    if (ord >= 3)
        for (std::size_t i = 0; i < r.third.size(); ++i) r.third[i] = a.third[i] - b.third[i];
    return r;
}

template <class T>
JetT<T> operator-(const JetT<T>& a) {
    JetT<T> r = a;
    r.value = -r.value;
    for (auto& x : r.grad) x = -x;
    for (auto& x : r.hess) x = -x;
    for (auto& x : r.third) x = -x;
    return r;
}

template <class T>
JetT<T> operator*(const JetT<T>& a, const JetT<T>& b) {
    const int d = a.dim;
    int ord = detail::joint_order(a, b);
    JetT<T> r(d, ord, a.value * b.value);
    if (ord >= 1)
        for (int i = 0; i < d; ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
    if (ord >= 2) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                T v = a.h(i, j) * b.value + a.grad[i] * b.grad[j] + a.grad[j] * b.grad[i] +
                      a.value * b.h(i, j);
                r.h(i, j) = v;
                r.h(j, i) = v;
            }
    }
    if (ord >= 3) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                for (int k = j; k < d; ++k) {
                    T v = a.t3(i, j, k) * b.value + a.value * b.t3(i, j, k) +
                          a.h(i, j) * b.grad[k] + a.h(i, k) * b.grad[j] +
                          a.h(j, k) * b.grad[i] + a.grad[i] * b.h(j, k) +
                          a.grad[j] * b.h(i, k) + a.grad[k] * b.h(i, j);
                    detail::assign_sym3(r, i, j, k, v);
                }
    }
    return r;
}

/// Quotient rule via the recurrence r = (f - lower-order terms) / g; avoids
/// forming 1/g as an intermediate jet.
template <class T>
JetT<T> operator/(const JetT<T>& a, const JetT<T>& b) {
    const int d = a.dim;
    int ord = detail::joint_order(a, b);
    if (std::abs(b.value) == 0.0) throw DegenerateValue("jet division by zero");
    JetT<T> r(d, ord, a.value / b.value);
    if (ord >= 1)
        for (int i = 0; i < d; ++i) r.grad[i] = (a.grad[i] - r.value * b.grad[i]) / b.value;
    if (ord >= 2) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                T v = (a.h(i, j) - r.grad[i] * b.grad[j] - r.grad[j] * b.grad[i] -
                       r.value * b.h(i, j)) /
                      b.value;
                r.h(i, j) = v;
                r.h(j, i) = v;
            }
    }
    if (ord >= 3) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                for (int k = j; k < d; ++k) {
                    T v = (a.t3(i, j, k) - r.h(i, j) * b.grad[k] - r.h(i, k) * b.grad[j] -
                           r.h(j, k) * b.grad[i] - r.grad[i] * b.h(j, k) -
                           r.grad[j] * b.h(i, k) - r.grad[k] * b.h(i, j) -
                           r.value * b.t3(i, j, k)) /
                          b.value;
                    detail::assign_sym3(r, i, j, k, v);
                }
    }
    return r;
}

template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator*(const JetT<T>& a, S s) {
    JetT<T> r = a;
    r.value = r.value * T(s);
    for (auto& x : r.grad) x = x * T(s);
    for (auto& x : r.hess) x = x * T(s);
    for (auto& x : r.third) x = x * T(s);
    return r;
}
template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator*(S s, const JetT<T>& a) { return a * s; }
inline CJet operator*(const CJet& a, std::complex<double> s) {
    CJet r = a;
    r.value *= s;
    for (auto& x : r.grad) x *= s;
    for (auto& x : r.hess) x *= s;
    for (auto& x : r.third) x *= s;
    return r;
}
inline CJet operator*(std::complex<double> s, const CJet& a) { return a * s; }

template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator+(const JetT<T>& a, S s) {
    JetT<T> r = a;
    r.value = r.value + T(s);
    return r;
}
template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator+(S s, const JetT<T>& a) { return a + s; }
template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator-(const JetT<T>& a, S s) { return a + (-double(s)); }
template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator-(S s, const JetT<T>& a) { return (-a) + s; }
template <class T, class S>
    requires std::is_arithmetic_v<S>
JetT<T> operator/(const JetT<T>& a, S s) { return a * (1.0 / double(s)); }

/// Chain rule for a scalar function given its derivatives f0..f3 at a.value.
Jet jet_chain(const Jet& a, double f0, double f1, double f2, double f3);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
/// a^e for a literal exponent; integral e works for any nonzero base.
Jet pow(const Jet& a, double e);

/// Widen a real jet into a complex one.
CJet complexify(const Jet& a);
CJet complexify(const Jet& re, const Jet& im);
Jet real_part(const CJet& a);
Jet imag_part(const CJet& a);
CJet conj(const CJet& a);

/// Shift a jet down one derivative level: the field dfield/dx_a as a jet of
/// order (a.order - 1).  Used to turn order-3 embedding jets into order-2
/// jets of the differential, and to realize exterior derivatives.
template <class T>
JetT<T> lower_to_derivative(const JetT<T>& a, int axis) {
    if (a.order < 1) throw OrderError("lower_to_derivative needs order >= 1");
    const int d = a.dim;
    JetT<T> r(d, a.order - 1, a.g(axis));
    if (r.order >= 1)
        for (int i = 0; i < d; ++i) r.grad[i] = a.h(axis, i);
    if (r.order >= 2)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r.h(i, j) = a.t3(axis, i, j);
    return r;
}

using ScalarFn = std::function<double(std::span<const double>)>;

/// Central-difference probe of a scalar field: O(h^2) estimates of the
/// derivatives up to `order`.  Each derivative axis applies one symmetric
/// difference, so repeated axes use a widened stencil (still O(h^2)).
/// If `box` is nonempty the stencil is checked against it (DomainError).
Jet fd_oracle(const ScalarFn& f, std::span<const double> p, int order, double h,
              std::span<const std::pair<double, double>> box = {});

} // namespace ahg
