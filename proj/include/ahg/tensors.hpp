#pragma once

#include <vector>

#include "ahg/linalg.hpp"

namespace ahg {

/// Dense rank-3 tensor of doubles.
struct T3 {
    int d = 0;
    std::vector<double> v;
    T3() = default;
    explicit T3(int dim) : d(dim), v(std::size_t(dim) * dim * dim, 0.0) {}
    double& at(int a, int b, int c) { return v[(std::size_t(a) * d + b) * d + c]; }
    double at(int a, int b, int c) const { return v[(std::size_t(a) * d + b) * d + c]; }
};

/// Dense rank-4 tensor of doubles.
struct T4 {
    int d = 0;
    std::vector<double> v;
    T4() = default;
    explicit T4(int dim) : d(dim), v(std::size_t(dim) * dim * dim * dim, 0.0) {}
    double& at(int a, int b, int c, int e) {
        return v[((std::size_t(a) * d + b) * d + c) * d + e];
    }
    double at(int a, int b, int c, int e) const {
        return v[((std::size_t(a) * d + b) * d + c) * d + e];
    }
};

/// Contract every slot with frame columns (slot-at-a-time).
T3 to_frame(const T3& t, const MatD& E);
T4 to_frame(const T4& t, const MatD& E);

double max_abs(const T3& t);
double max_abs(const T4& t);

} // namespace ahg
