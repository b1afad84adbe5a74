#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "sym_matrix.hpp"

namespace ul2 {

using VertexFunction = std::vector<double>;

inline SymMatrix normalized_laplacian(const Graph& g) {
    int n = g.order();
    if (n == 0) throw Error(ErrorCode::Precondition, "empty graph");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
    SymMatrix m(n);
    for (int v = 0; v < n; ++v) m.set(v, v, 1.0);
    for (auto [u, v] : g.edges()) m.set(u, v, -1.0 / std::sqrt(double(g.degree(u)) * g.degree(v)));
    return m;
}

inline Spectrum laplacian_spectrum(const Graph& g) { return eigenvalues_sym(normalized_laplacian(g)); }

// 1-based k
inline double lambda_k(const Graph& g, int k) {
    if (k < 1 || k > g.order())
        throw Error(ErrorCode::IndexOutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(g.order()));
    return laplacian_spectrum(g).values[k - 1];
}

inline double lambda2(const Graph& g) { return lambda_k(g, 2); }

inline double rayleigh_quotient(const Graph& g, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != g.order())
        throw Error(ErrorCode::SizeMismatch, "function length differs from order");
    double num = 0, den = 0;
    for (auto [u, v] : g.edges()) num += (f[u] - f[v]) * (f[u] - f[v]);
    for (int v = 0; v < g.order(); ++v) den += g.degree(v) * f[v] * f[v];
    if (!(den > 0)) throw Error(ErrorCode::ZeroDenominator, "sum of d(v) f(v)^2 is zero");
    return num / den;
}

// f = D^{-1/2} x for the lambda_2 eigenvector x; scaled so sum d f^2 = 1,
// sign fixed by the first clearly nonzero entry.
inline VertexFunction harmonic_eigenfunction(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) throw Error(ErrorCode::Precondition, "need a connected graph with n >= 2");
    EigenSystem es = eigen_sym(normalized_laplacian(g));
    const auto& x = es.vectors[1];
    int n = g.order();
    VertexFunction f(n);
    double s = 0;
    for (int v = 0; v < n; ++v) {
        f[v] = x[v] / std::sqrt(double(g.degree(v)));
        s += g.degree(v) * f[v] * f[v];
    }
    double scale = 1.0 / std::sqrt(s);
    for (int v = 0; v < n; ++v)
        if (std::fabs(f[v]) > 1e-9) {
            if (f[v] < 0) scale = -scale;
            break;
        }
    for (double& y : f) y *= scale;
    return f;
}

inline double cycle_lambda2_closed_form(int n) {
    if (n < 3) throw Error(ErrorCode::Precondition, "cycle length " + std::to_string(n) + " < 3");
    return 1.0 - std::cos(2.0 * std::numbers::pi / n);
}

} // namespace ul2
