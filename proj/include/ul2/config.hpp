#pragma once

#include <cmath>

namespace ul2 {

struct Tolerances {
    double eig_residual = 1e-10;
    double identity = 1e-9;
    double paper = 5e-5;
    int enum_bound = 12;
    static constexpr int enum_bound_max = 14;
    int jacobi_max_sweeps = 60;
    double jacobi_rel_offdiag = 1e-12;
};

inline Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

// 1 - sqrt(6)/3
inline double threshold() { return 1.0 - std::sqrt(6.0) / 3.0; }

} // namespace ul2
