#pragma once

// Dense small-dimension linear algebra: matrix exponential, spectral norm,
// and closed-form integrals of exp-kernels against vector polynomials.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "picard/errors.hpp"

namespace picard {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline bool all_finite(const Mat& m) { return m.allFinite(); }
inline bool all_finite(const Vec& v) { return v.allFinite(); }

/// e^{tA} for a square matrix A (scaling-and-squaring, Pade approximant).
inline Mat mat_exp(const Mat& A, double t) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("mat_exp: matrix must be square");
    if (!A.allFinite() || !std::isfinite(t))
        throw std::invalid_argument("mat_exp: non-finite input");
    return (t * A).exp();
}

/// Spectral norm: sup over unit vectors of ||A x||.
inline double op_norm(const Mat& A) {
    if (!A.allFinite())
        throw std::invalid_argument("op_norm: non-finite input");
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    return A.jacobiSvd().singularValues()(0);
}

/// Vector-valued polynomial in the monomial basis centered at `center`:
///   p(x) = sum_j coeffs[j] * ((x - center) / scale)^j
/// The scale is 1 by default; stored segments use the segment width to keep
/// the basis well conditioned.
struct VecPoly {
    int dim = 0;
    double center = 0.0;
    double scale = 1.0;
    std::vector<Vec> coeffs;  // size degree+1; leading coefficient kept even if zero

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Vec eval(double x) const {
        const double u = (x - center) / scale;
        Vec acc = coeffs.back();
        for (int j = degree() - 1; j >= 0; --j) acc = coeffs[j] + u * acc;
        return acc;
    }
};

/// Closed-form oriented integral  int_{x0}^{x} e^{(x-s)A} p(s) ds.
///
/// Couples A to the shift generator of the monomial basis: with
/// m_j(s) = (s - c)^j the augmented system w = (v; m) obeys
/// w' = [[A, C],[0, D]] w where C holds the (de-scaled) polynomial
/// coefficients and D is the differentiation matrix of the monomials.
/// Propagating (0; m(x0)) from x0 to x yields the integral in the top block.
inline Vec exp_poly_integral(const Mat& A, double x0, double x, const VecPoly& p) {
    const int n = static_cast<int>(A.rows());
    if (A.rows() != A.cols())
        throw std::invalid_argument("exp_poly_integral: matrix must be square");
    if (p.dim != n)
        throw std::invalid_argument("exp_poly_integral: dimension mismatch");
    if (!A.allFinite() || !std::isfinite(x0) || !std::isfinite(x))
        throw std::invalid_argument("exp_poly_integral: non-finite input");

    const int d = p.degree();
    const int m = n + d + 1;
    Mat B = Mat::Zero(m, m);
    B.topLeftCorner(n, n) = A;
    double sj = 1.0;  // scale^j
    for (int j = 0; j <= d; ++j) {
        B.block(0, n + j, n, 1) = p.coeffs[j] / sj;
        sj *= p.scale;
    }
    for (int j = 1; j <= d; ++j) B(n + j, n + j - 1) = static_cast<double>(j);

    Vec w0 = Vec::Zero(m);
    double mj = 1.0;
    for (int j = 0; j <= d; ++j) {
        w0(n + j) = mj;
        mj *= (x0 - p.center);
    }
    return (((x - x0) * B).exp() * w0).head(n);
}

}  // namespace picard
