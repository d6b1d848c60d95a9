#include "ahg/tensors.hpp"

#include <cmath>

namespace ahg {

namespace {

// contract slot 0 with E, cycling slots so three/four applications convert all
T3 rotate_contract(const T3& t, const MatD& E) {
    const int d = t.d;
    T3 r(d);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
            for (int A = 0; A < d; ++A) {
                double s = 0;
                for (int a = 0; a < d; ++a) s += t.at(a, b, c) * E(a, A);
                r.at(b, c, A) = s; // note the cyclic shift
            }
    return r;
}

T4 rotate_contract(const T4& t, const MatD& E) {
    const int d = t.d;
    T4 r(d);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e)
                for (int A = 0; A < d; ++A) {
                    double s = 0;
                    for (int a = 0; a < d; ++a) s += t.at(a, b, c, e) * E(a, A);
                    r.at(b, c, e, A) = s;
                }
    return r;
}

} // namespace

T3 to_frame(const T3& t, const MatD& E) {
    T3 r = t;
    for (int k = 0; k < 3; ++k) r = rotate_contract(r, E);
    return r;
}

T4 to_frame(const T4& t, const MatD& E) {
    T4 r = t;
    for (int k = 0; k < 4; ++k) r = rotate_contract(r, E);
    return r;
}

double max_abs(const T3& t) {
    double m = 0;
    for (double x : t.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const T4& t) {
    double m = 0;
    for (double x : t.v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace ahg
