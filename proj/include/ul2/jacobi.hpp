#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "format.hpp"
#include "sym_matrix.hpp"

namespace ul2 {

struct Spectrum {
    std::vector<double> values; // ascending
    double residual = 0.0;      // max ||Mx - lx|| over computed pairs

    size_t size() const { return values.size(); }
    double operator[](size_t i) const { return values[i]; }
};

struct EigenSystem {
    Spectrum spectrum;
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k], unit length
};

// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm falls under
// rel * ||M||_F.
inline EigenSystem eigen_sym(const SymMatrix& m) {
    const Tolerances& tol = tolerances();
    int n = m.dim();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    double norm = m.frobenius();
    auto offdiag = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += A(i, j) * A(i, j);
        return std::sqrt(s);
    };

    double off = offdiag();
    int sweep = 0;
    while (off >= tol.jacobi_rel_offdiag * norm && off > 0.0) {
        if (sweep == tol.jacobi_max_sweeps)
            throw Error(ErrorCode::NonConvergence, "no convergence after " + std::to_string(sweep) +
                                                       " sweeps, off-diagonal norm " + fmt17(off));
        ++sweep;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (apq == 0.0) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = A(k, p), akq = A(k, q);
                    A(k, p) = A(p, k) = c * akp - s * akq;
                    A(k, q) = A(q, k) = s * akp + c * akq;
                }
                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        off = offdiag();
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) < A(y, y); });

    EigenSystem es;
    es.spectrum.values.reserve(n);
    es.vectors.reserve(n);
    double worst = 0;
    for (int k : order) {
        double lam = A(k, k);
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = V(i, k);
        std::vector<double> mx = m.apply(x);
        double r = 0;
        for (int i = 0; i < n; ++i) r += (mx[i] - lam * x[i]) * (mx[i] - lam * x[i]);
        worst = std::max(worst, std::sqrt(r));
        es.spectrum.values.push_back(lam);
        es.vectors.push_back(std::move(x));
    }
    es.spectrum.residual = worst;
    if (worst > tol.eig_residual * std::max(1.0, norm))
        throw Error(ErrorCode::NonConvergence, "eigenpair residual " + fmt17(worst) + " above bound");
    return es;
}

inline Spectrum eigenvalues_sym(const SymMatrix& m) { return eigen_sym(m).spectrum; }

// both sorted; same length and pairwise within tol
inline bool spectra_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

// outer has one more value than inner; x1 <= y1 <= x2 <= ... <= y_{n-1} <= x_n
inline bool check_interlacing(const Spectrum& outer, const Spectrum& inner, double tol = -1) {
    if (tol < 0) tol = tolerances().identity;
    if (outer.size() != inner.size() + 1)
        throw Error(ErrorCode::SizeMismatch, "outer has " + std::to_string(outer.size()) + " values, inner " +
                                                 std::to_string(inner.size()) + "; need outer = inner + 1");
    for (size_t i = 0; i < inner.size(); ++i) {
        if (outer[i] > inner[i] + tol) return false;
        if (inner[i] > outer[i + 1] + tol) return false;
    }
    return true;
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    for (double x : s.values) out << fmt17(x) << '\n';
}

} // namespace ul2
