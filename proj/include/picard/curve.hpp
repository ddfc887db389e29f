#pragma once

// Piecewise polynomial curves: the artifact's representation of approximate
// solutions. Segments store either monomial coefficients in the scaled
// variable u = (x-x0)/(x1-x0) or Chebyshev coefficients in t = 2u-1.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "picard/linalg.hpp"
#include "picard/quadrature.hpp"

namespace picard {

enum class SegmentBasis { monomial, chebyshev };

struct CurveSegment {
    double x0 = 0.0;
    double x1 = 1.0;
    SegmentBasis basis = SegmentBasis::monomial;
    std::vector<Vec> coeffs;

    int dim() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].size()); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Vec eval(double x) const {
        const double u = (x - x0) / (x1 - x0);
        if (basis == SegmentBasis::monomial) {
            Vec acc = coeffs.back();
            for (int j = degree() - 1; j >= 0; --j) acc = coeffs[j] + u * acc;
            return acc;
        }
        // Clenshaw recurrence on t in [-1,1].
        const double t = 2.0 * u - 1.0;
        const int m = degree();
        Vec b1 = Vec::Zero(dim()), b2 = Vec::Zero(dim());
        for (int j = m; j >= 1; --j) {
            Vec b0 = 2.0 * t * b1 - b2 + coeffs[j];
            b2 = std::move(b1);
            b1 = std::move(b0);
        }
        return coeffs[0] + t * b1 - b2;
    }
};

/// Interpolate fn on [x0,x1] by a degree-m Chebyshev polynomial sampled at
/// the Lobatto points; the endpoint values are pinned exactly by a linear
/// correction so node continuity survives the coefficient transform.
inline CurveSegment chebyshev_fit_segment(double x0, double x1, int m,
                                          const std::function<Vec(double)>& fn) {
    const auto pts = chebyshev_lobatto_points(m, x0, x1);
    std::vector<Vec> samples(m + 1);
    for (int i = 0; i <= m; ++i) samples[i] = fn(pts[i]);
    const int n = static_cast<int>(samples[0].size());

    CurveSegment seg;
    seg.x0 = x0;
    seg.x1 = x1;
    seg.basis = SegmentBasis::chebyshev;
    seg.coeffs.assign(m + 1, Vec::Zero(n));
    // samples are ascending in x; sample at t_i = cos(pi i / m) is samples[m-i]
    for (int j = 0; j <= m; ++j) {
        Vec c = Vec::Zero(n);
        for (int i = 0; i <= m; ++i) {
            const double w = (i == 0 || i == m) ? 0.5 : 1.0;
            c += w * std::cos(std::numbers::pi * j * i / m) * samples[m - i];
        }
        c *= 2.0 / m;
        if (j == 0 || j == m) c *= 0.5;
        seg.coeffs[j] = c;
    }
    // Pin both endpoints: add a + b t with a+b and a-b fixing the residuals.
    const Vec r_left = samples.front() - seg.eval(x0);
    const Vec r_right = samples.back() - seg.eval(x1);
    seg.coeffs[0] += 0.5 * (r_left + r_right);
    if (m >= 1) seg.coeffs[1] += 0.5 * (r_right - r_left);
    return seg;
}

struct PiecewiseCurve {
    std::vector<double> nodes;           // ascending, size segments+1
    std::vector<CurveSegment> segments;

    bool empty() const { return segments.empty(); }
    int dim() const { return segments.empty() ? 0 : segments[0].dim(); }
    double a() const { return nodes.front(); }
    double b() const { return nodes.back(); }

    Vec eval(double x) const {
        if (segments.empty())
            throw std::invalid_argument("PiecewiseCurve::eval: empty curve");
        const double lo = nodes.front(), hi = nodes.back();
        const double slack = 1e-9 * (1.0 + std::abs(hi - lo));
        if (x < lo - slack || x > hi + slack)
            throw std::invalid_argument("PiecewiseCurve::eval: abscissa outside domain");
        x = std::clamp(x, lo, hi);
        auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
        int idx = static_cast<int>(it - nodes.begin()) - 1;
        idx = std::clamp(idx, 0, static_cast<int>(segments.size()) - 1);
        return segments[idx].eval(x);
    }

    /// Value of component i at x.
    double eval1(double x, int i) const { return eval(x)(i); }
};

}  // namespace picard
