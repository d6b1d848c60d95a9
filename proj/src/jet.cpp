#include "ahg/jet.hpp"

#include <cmath>

namespace ahg {

Jet jet_chain(const Jet& a, double f0, double f1, double f2, double f3) {
    const int d = a.dim;
    Jet r(d, a.order, f0);
    if (a.order >= 1)
        for (int i = 0; i < d; ++i) r.grad[i] = f1 * a.grad[i];
    if (a.order >= 2) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                double v = f2 * a.grad[i] * a.grad[j] + f1 * a.h(i, j);
                r.h(i, j) = v;
                r.h(j, i) = v;
            }
    }
    if (a.order >= 3) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                for (int k = j; k < d; ++k) {
                    double v = f3 * a.grad[i] * a.grad[j] * a.grad[k] +
                               f2 * (a.h(i, j) * a.grad[k] + a.h(i, k) * a.grad[j] +
                                     a.h(j, k) * a.grad[i]) +
                               f1 * a.t3(i, j, k);
                    detail::assign_sym3(r, i, j, k, v);
                }
    }
    return r;
}

Jet sin(const Jet& a) {
    double s = std::sin(a.value), c = std::cos(a.value);
    return jet_chain(a, s, c, -s, -c);
}

Jet cos(const Jet& a) {
    double s = std::sin(a.value), c = std::cos(a.value);
    return jet_chain(a, c, -s, -c, s);
}

Jet exp(const Jet& a) {
    double e = std::exp(a.value);
    return jet_chain(a, e, e, e, e);
}

Jet log(const Jet& a) {
    if (!(a.value > 0.0)) throw DegenerateValue("log of non-positive jet value");
    double v = a.value;
    return jet_chain(a, std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet sqrt(const Jet& a) {
    if (!(a.value > 0.0)) throw DegenerateValue("sqrt of non-positive jet value");
    double s = std::sqrt(a.value);
    return jet_chain(a, s, 0.5 / s, -0.25 / (s * a.value), 0.375 / (s * a.value * a.value));
}

Jet pow(const Jet& a, double e) {
    const double v = a.value;
    const bool integral = e == std::floor(e);
    if (v == 0.0) {
        if (!integral || e < 0.0) throw DegenerateValue("pow at zero base");
        // Monomial at the origin: only finitely many derivatives survive.
        auto dpow = [&](double k) {
            double c = 1.0;
            for (int m = 0; m < int(k); ++m) c *= (e - m);
            double p = e - k;
            return p < 0 ? 0.0 : c * (p == 0.0 ? 1.0 : 0.0);
        };
        return jet_chain(a, dpow(0), dpow(1), dpow(2), dpow(3));
    }
    if (v < 0.0 && !integral) throw DegenerateValue("pow of negative base with non-integral exponent");
    double f0 = std::pow(v, e);
    double f1 = e * std::pow(v, e - 1);
    double f2 = e * (e - 1) * std::pow(v, e - 2);
    double f3 = e * (e - 1) * (e - 2) * std::pow(v, e - 3);
    return jet_chain(a, f0, f1, f2, f3);
}

CJet complexify(const Jet& a) {
    CJet r(a.dim, a.order);
    r.value = a.value;
    for (std::size_t i = 0; i < a.grad.size(); ++i) r.grad[i] = a.grad[i];
    for (std::size_t i = 0; i < a.hess.size(); ++i) r.hess[i] = a.hess[i];
    for (std::size_t i = 0; i < a.third.size(); ++i) r.third[i] = a.third[i];
    return r;
}

CJet complexify(const Jet& re, const Jet& im) {
    CJet r = complexify(re);
    const std::complex<double> I(0, 1);
    r.value += I * im.value;
    for (std::size_t i = 0; i < re.grad.size(); ++i) r.grad[i] += I * im.grad[i];
    for (std::size_t i = 0; i < re.hess.size(); ++i) r.hess[i] += I * im.hess[i];
    for (std::size_t i = 0; i < re.third.size(); ++i) r.third[i] += I * im.third[i];
    return r;
}

Jet real_part(const CJet& a) {
    Jet r(a.dim, a.order);
    r.value = a.value.real();
    for (std::size_t i = 0; i < a.grad.size(); ++i) r.grad[i] = a.grad[i].real();
    for (std::size_t i = 0; i < a.hess.size(); ++i) r.hess[i] = a.hess[i].real();
    for (std::size_t i = 0; i < a.third.size(); ++i) r.third[i] = a.third[i].real();
    return r;
}

Jet imag_part(const CJet& a) {
    Jet r(a.dim, a.order);
    r.value = a.value.imag();
    for (std::size_t i = 0; i < a.grad.size(); ++i) r.grad[i] = a.grad[i].imag();
    for (std::size_t i = 0; i < a.hess.size(); ++i) r.hess[i] = a.hess[i].imag();
    for (std::size_t i = 0; i < a.third.size(); ++i) r.third[i] = a.third[i].imag();
    return r;
}

CJet conj(const CJet& a) {
    CJet r = a;
    r.value = std::conj(r.value);
    for (auto& x : r.grad) x = std::conj(x);
    for (auto& x : r.hess) x = std::conj(x);
    for (auto& x : r.third) x = std::conj(x);
    return r;
}

namespace {

double fd_apply(const ScalarFn& f, std::vector<double>& x, std::span<const int> axes, double h,
                std::span<const std::pair<double, double>> box) {
    if (axes.empty()) {
        if (!box.empty())
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] < box[i].first || x[i] > box[i].second)
                    throw DomainError("finite-difference stencil leaves chart domain");
        return f(x);
    }
    int a = axes.front();
    auto rest = axes.subspan(1);
    x[a] += h;
    double fp = fd_apply(f, x, rest, h, box);
    x[a] -= 2 * h;
    double fm = fd_apply(f, x, rest, h, box);
    x[a] += h;
    return (fp - fm) / (2 * h);
}

} // namespace

Jet fd_oracle(const ScalarFn& f, std::span<const double> p, int order, double h,
              std::span<const std::pair<double, double>> box) {
    if (!(h > 0)) throw DomainError("fd_oracle requires h > 0");
    const int d = int(p.size());
    std::vector<double> x(p.begin(), p.end());
    Jet r(d, order);
    r.value = fd_apply(f, x, {}, h, box);
    for (int a = 0; a < d; ++a) {
        int ax[1] = {a};
        r.grad[a] = fd_apply(f, x, ax, h, box);
    }
    if (order >= 2)
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                int ax[2] = {a, b};
                double v = fd_apply(f, x, ax, h, box);
                r.h(a, b) = v;
                r.h(b, a) = v;
            }
    if (order >= 3)
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b)
                for (int c = b; c < d; ++c) {
                    int ax[3] = {a, b, c};
                    double v = fd_apply(f, x, ax, h, box);
                    int idx[3] = {a, b, c};
                    // all permutations get the same value
                    int perms[6][3] = {{idx[0], idx[1], idx[2]}, {idx[0], idx[2], idx[1]},
                                       {idx[1], idx[0], idx[2]}, {idx[1], idx[2], idx[0]},
                                       {idx[2], idx[0], idx[1]}, {idx[2], idx[1], idx[0]}};
                    for (auto& q : perms) r.t3(q[0], q[1], q[2]) = v;
                }
    return r;
}

} // namespace ahg
