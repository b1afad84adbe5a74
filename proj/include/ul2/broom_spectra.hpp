#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"
#include "families.hpp"
#include "jacobi.hpp"
#include "laplacian.hpp"

namespace ul2 {

inline bool has_root_deleted_closed_form(Family f) {
    switch (f) {
    case Family::H42: case Family::H94: case Family::A8: case Family::A11: case Family::A35:
    case Family::B4: case Family::B7: case Family::B42: case Family::B44: case Family::B66:
        return true;
    default:
        return false;
    }
}

// Eigenvalues of the normalized Laplacian with the broom root's row and
// column removed, as closed-form surds.
inline Spectrum broom_root_deleted_spectrum(Family f, const std::vector<int>& l) {
    if (!has_root_deleted_closed_form(f))
        throw Error(ErrorCode::UnknownFamily, "no closed-form list for this family");
    detail::check_params({f, 0}, l);
    const int l0 = l[0], l1 = l[1], l2 = l[2];
    const double r6 = std::sqrt(6.0) / 3, r2 = std::sqrt(2.0) / 2;
    std::vector<double> v;
    auto rep = [&](double x, int k) { v.insert(v.end(), std::max(k, 0), x); };
    auto pm = [&](double c, double d, int k) { rep(c - d, k); rep(c + d, k); };

    // shared by every family: cherry branches and one-leaf branches
    int cherries = l2, pairs = l1, ones = 0;
    switch (f) {
    case Family::H42:
        pm(0.75, std::sqrt(5.0) / 4, 1);
        pm(1.25, std::sqrt(5.0) / 4, 1);
        ones = l0 + l2;
        break;
    case Family::H94:
        cherries = l2 + 1;
        pm(1.0, std::sqrt(3.0) / 3, 1);
        ones = l0 + l2 + 1;
        break;
    case Family::A8:
        cherries = l2 + 1;
        ones = l0 + l2 + 2;
        break;
    case Family::A11: {
        double s = std::sqrt(11.0 / 48);
        pm(1.0, std::sqrt((0.75 - s) / 2), 1);
        pm(1.0, std::sqrt((0.75 + s) / 2), 1);
        ones = l0 + l2;
        break;
    }
    case Family::A35:
        pairs = l1 + 1;
        ones = l0 + l2 + 1;
        break;
    case Family::B4: {
        double s = std::sqrt(13.0);
        pm(1.0, std::sqrt((7 - s) / 18), 1);
        pm(1.0, std::sqrt((7 + s) / 18), 1);
        ones = l0 + l2;
        break;
    }
    case Family::B7:
        cherries = l2 + 1;
        pm(1.0, 0.5, 1);
        ones = l0 + l2 + 1;
        break;
    case Family::B42:
        pairs = l1 + 1;
        ones = l0 + l2 + 1;
        break;
    case Family::B44:
        pm(1.0, std::sqrt(5.0 / 8), 1);
        ones = l0 + l2 + 2;
        break;
    case Family::B66:
        pm(1.0, 0.5, 1);
        ones = l0 + l2;
        break;
    default:
        break;
    }
    pm(1.0, r6, cherries);
    pm(1.0, r2, pairs);
    rep(1.0, ones);
    std::sort(v.begin(), v.end());
    return {v, 0.0};
}

inline Spectrum numeric_root_deleted_spectrum(Family f, const std::vector<int>& l) {
    FamilyInstance fi = make_family({f, 0}, l);
    return eigenvalues_sym(principal_submatrix(normalized_laplacian(fi.graph), broom_root({f, 0})));
}

} // namespace ul2
