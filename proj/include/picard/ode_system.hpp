#pragma once

// First-order system y' = F(x,y) together with its linear split
// F(x,y) = A y + G(x,y).

#include <functional>
#include <vector>

#include "picard/jet.hpp"
#include "picard/linalg.hpp"

namespace picard {

using RhsFn = std::function<Vec(double, const Vec&)>;

/// Right-hand side lifted to truncated power series; absent (empty) when a
/// problem does not provide jet arithmetic for the Taylor solver.
using JetRhsFn = std::function<void(double x0, const std::vector<Jet>& y, std::vector<Jet>& dy)>;

struct OdeSystem {
    int dim = 0;
    RhsFn rhs;        // F(x, y)
    Mat A;            // constant linear part
    RhsFn g;          // G(x, y) = F(x, y) - A y
    JetRhsFn jet_rhs; // optional

    Vec eval_rhs(double x, const Vec& y) const { return rhs(x, y); }
    Vec eval_g(double x, const Vec& y) const { return g(x, y); }
};

/// Split a right-hand side around a constant linear part A.
inline OdeSystem split_system(RhsFn rhs, int n, const Mat& A, JetRhsFn jet = {}) {
    if (A.rows() != n || A.cols() != n)
        throw std::invalid_argument("split_system: A must be n x n");
    OdeSystem sys;
    sys.dim = n;
    sys.rhs = rhs;
    sys.A = A;
    sys.g = [rhs = std::move(rhs), A](double x, const Vec& y) -> Vec {
        return rhs(x, y) - A * y;
    };
    sys.jet_rhs = std::move(jet);
    return sys;
}

/// The same system with the linear part forced to zero (Standard Picard view).
inline OdeSystem zero_split(const OdeSystem& sys) {
    OdeSystem out;
    out.dim = sys.dim;
    out.rhs = sys.rhs;
    out.A = Mat::Zero(sys.dim, sys.dim);
    out.g = sys.rhs;
    out.jet_rhs = sys.jet_rhs;
    return out;
}

}  // namespace picard
