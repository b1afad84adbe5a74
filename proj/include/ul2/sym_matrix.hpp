#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"

namespace ul2 {

// Dense symmetric matrix, row-major. set() writes both triangles.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 0) throw Error(ErrorCode::Precondition, "negative dimension");
    }

    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        int n = static_cast<int>(rows.size());
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::SizeMismatch, "matrix not square");
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(rows[i][j])) throw Error(ErrorCode::Precondition, "non-finite entry");
                if (rows[i][j] != rows[j][i])
                    throw Error(ErrorCode::Precondition,
                                "not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                m.a_[static_cast<size_t>(i) * n + j] = rows[i][j];
            }
        }
        return m;
    }

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        if (!std::isfinite(v)) throw Error(ErrorCode::Precondition, "non-finite entry");
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    double frobenius() const {
        double s = 0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            double s = 0;
            for (int j = 0; j < n_; ++j) s += a_[static_cast<size_t>(i) * n_ + j] * x[j];
            y[i] = s;
        }
        return y;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline SymMatrix principal_submatrix(const SymMatrix& m, int v) {
    int n = m.dim();
    if (v < 0 || v >= n)
        throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(v) + " for dimension " + std::to_string(n));
    SymMatrix r(n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == v) continue;
        for (int j = i, rj = ri; j < n; ++j) {
            if (j == v) continue;
            r.set(ri, rj, m(i, j));
            ++rj;
        }
        ++ri;
    }
    return r;
}

} // namespace ul2
