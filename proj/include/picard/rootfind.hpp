#pragma once

// Scalar root finding: bracketed hybrid (secant step with bisection safeguard)
// and a plain secant with bisection fallback once a bracket appears.

#include <cmath>
#include <functional>

#include "picard/errors.hpp"

namespace picard {

using ScalarFn = std::function<double(double)>;

/// Root in [lo,hi] assuming a sign change. Stops when |f| <= tol or the
/// bracket width drops below 1e-12 * max(1,|x|).
inline double find_root_bracketed(const ScalarFn& f, double lo, double hi, double tol = 1e-12,
                                  int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw root_not_found_error("find_root_bracketed: no sign change on bracket");
    for (int it = 0; it < max_iter; ++it) {
        // secant (false position) candidate, safeguarded by the midpoint
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double mid = 0.5 * (lo + hi);
        if (!(x > lo && x < hi)) x = mid;
        // keep steps from stagnating at an endpoint
        const double minstep = 0.01 * (hi - lo);
        if (x - lo < minstep || hi - x < minstep) x = mid;
        const double fx = f(x);
        if (std::abs(fx) <= tol) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(x))) return 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

/// Secant iteration from two seeds; switches to the bracketed hybrid as soon
/// as a sign change has been seen. Throws when no convergence in max_iter.
inline double find_root_secant(const ScalarFn& f, double s0, double s1, double tol = 1e-12,
                               int max_iter = 50) {
    double x0 = s0, x1 = s1;
    double f0 = f(x0), f1 = f(x1);
    if (std::abs(f0) <= tol) return x0;
    if (std::abs(f1) <= tol) return x1;
    for (int it = 0; it < max_iter; ++it) {
        if (f0 * f1 < 0.0)
            return find_root_bracketed(f, std::min(x0, x1), std::max(x0, x1), tol, max_iter);
        if (f1 == f0)
            throw root_not_found_error("find_root_secant: flat secant");
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2))
            throw root_not_found_error("find_root_secant: non-finite step");
        const double f2 = f(x2);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (std::abs(f1) <= tol || std::abs(x1 - x0) <= 1e-12 * std::max(1.0, std::abs(x1)))
            return x1;
    }
    throw root_not_found_error("find_root_secant: max iterations reached");
}

}  // namespace picard
