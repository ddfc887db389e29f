#pragma once

// The Extended Picard iteration on one segment, its segmentary extension,
// the Standard Picard variant and convergence diagnostics.

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "picard/curve.hpp"
#include "picard/errors.hpp"
#include "picard/linalg.hpp"
#include "picard/ode_system.hpp"
#include "picard/quadrature.hpp"

namespace picard {

enum class Backend { poly_fit, quadrature };

struct SolveSettings {
    double h = 0.1;            // segment width
    int n_iter = 3;            // iterations per segment (0 returns the seed)
    int fit_degree = 3;        // 1 or 3
    int fit_samples = 8;       // Chebyshev-Gauss sample count per segment
    Backend backend = Backend::poly_fit;
    int quad_points = 16;      // Gauss-Legendre points (quadrature backend)
    bool seed_previous = false;  // reuse previous segment's final iterate as seed
    bool seed_constant = false;  // constant seed at each segment's initial value
    double divergence_limit = 1e8;

    void validate() const {
        if (!(h > 0.0)) throw std::invalid_argument("SolveSettings: h must be > 0");
        if (n_iter < 0) throw std::invalid_argument("SolveSettings: n_iter must be >= 0");
        if (fit_degree != 1 && fit_degree != 3)
            throw std::invalid_argument("SolveSettings: fit_degree must be 1 or 3");
        if (fit_samples < fit_degree + 1)
            throw std::invalid_argument("SolveSettings: fit_samples must be >= fit_degree+1");
        if (quad_points < 2)
            throw std::invalid_argument("SolveSettings: quad_points must be >= 2");
        if (seed_previous && seed_constant)
            throw std::invalid_argument(
                "SolveSettings: seed_previous and seed_constant are mutually exclusive");
    }
};

struct ConvergenceReport {
    std::vector<double> sup_diffs;  // sup_diffs[k-1] = sup ||y_k - y_{k-1}||
    double M_est = 0.0;             // e^{2c ||A||}, c = max(|x0|,|x1|)
    double K_est = 0.0;             // sampled Lipschitz constant of G in y
    double H_est = 0.0;             // sampled bound on ||G(s, y_0(s))||
    std::vector<bool> bound_ok;     // sup_diffs[k-1] <= H M^k K^k (b-a)^k / k!
};

using CurveFn = std::function<Vec(double)>;

/// Least-squares polynomial through weighted samples, minimizing the sum of
/// squared Euclidean residuals. Monomial basis centered at `center` (the
/// smallest abscissa when not given).
inline VecPoly fit_forcing_polynomial(const std::vector<std::pair<double, Vec>>& samples,
                                      int degree,
                                      std::optional<double> center = std::nullopt) {
    const int m = static_cast<int>(samples.size());
    if (m < degree + 1)
        throw degenerate_fit_error("fit_forcing_polynomial: not enough samples");
    double c = center.value_or(samples[0].first);
    if (!center) {
        for (const auto& s : samples) c = std::min(c, s.first);
    }
    const int n = static_cast<int>(samples[0].second.size());
    Mat V(m, degree + 1);
    Mat rhs(m, n);
    for (int i = 0; i < m; ++i) {
        double u = 1.0;
        for (int j = 0; j <= degree; ++j) {
            V(i, j) = u;
            u *= samples[i].first - c;
        }
        rhs.row(i) = samples[i].second.transpose();
    }
    Eigen::ColPivHouseholderQR<Mat> qr(V);
    if (qr.rank() < degree + 1)
        throw degenerate_fit_error("fit_forcing_polynomial: rank-deficient sample set");
    Mat sol = qr.solve(rhs);  // (degree+1) x n
    VecPoly p;
    p.dim = n;
    p.center = c;
    p.scale = 1.0;
    p.coeffs.resize(degree + 1);
    for (int j = 0; j <= degree; ++j) p.coeffs[j] = sol.row(j).transpose();
    return p;
}

namespace detail {

/// Iterates y_0..y_n on one segment, each evaluable anywhere on [x0,x1].
struct SegmentIterates {
    std::vector<CurveFn> iterates;
    const CurveFn& final() const { return iterates.back(); }
};

inline void check_finite_bounded(const Vec& v, double limit, int iteration, int segment) {
    for (int i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i)) || std::abs(v(i)) > limit)
            throw divergence_error("picard iterate diverged", iteration, segment);
    }
}

inline SegmentIterates iterate_segment_core(const OdeSystem& sys, double x0, const Vec& y0,
                                            double x1, const SolveSettings& settings,
                                            CurveFn seed = {}, int segment_index = -1) {
    const Mat A = sys.A;
    CurveFn hom = [A, x0, y0](double x) -> Vec { return mat_exp(A, x - x0) * y0; };

    SegmentIterates out;
    out.iterates.push_back(seed ? seed : hom);

    if (settings.backend == Backend::poly_fit) {
        const auto nodes = chebyshev_gauss_points(settings.fit_samples, x0, x1);
        for (int k = 1; k <= settings.n_iter; ++k) {
            const CurveFn& prev = out.iterates.back();
            std::vector<std::pair<double, Vec>> samples;
            samples.reserve(nodes.size());
            for (double s : nodes) {
                Vec yv = prev(s);
                check_finite_bounded(yv, settings.divergence_limit, k, segment_index);
                samples.emplace_back(s, sys.eval_g(s, yv));
            }
            VecPoly p = fit_forcing_polynomial(samples, settings.fit_degree, x0);
            out.iterates.push_back([A, x0, y0, p](double x) -> Vec {
                return mat_exp(A, x - x0) * y0 + exp_poly_integral(A, x0, x, p);
            });
        }
    } else {
        const QuadRule rule = gauss_legendre(settings.quad_points);
        const int store_degree = std::max(3, settings.quad_points - 1);
        for (int k = 1; k <= settings.n_iter; ++k) {
            const CurveFn prev = out.iterates.back();
            auto eval_next = [&](double x) -> Vec {
                Vec part = Vec::Zero(sys.dim);
                if (x != x0) {
                    part = gauss_legendre_integrate(
                        [&](double s) -> Vec {
                            Vec yv = prev(s);
                            check_finite_bounded(yv, settings.divergence_limit, k, segment_index);
                            return mat_exp(A, x - s) * sys.eval_g(s, yv);
                        },
                        x0, x, rule);
                }
                return hom(x) + part;
            };
            CurveSegment stored = chebyshev_fit_segment(x0, x1, store_degree, eval_next);
            out.iterates.push_back([stored](double x) -> Vec { return stored.eval(x); });
        }
    }
    return out;
}

inline int segment_count(double a, double b, double h) {
    return std::max(1, static_cast<int>(std::ceil((b - a) / h - 1e-12)));
}

}  // namespace detail

/// Convergence diagnostic on a set of segment iterates (101-point grid).
inline ConvergenceReport convergence_diagnostic(const OdeSystem& sys,
                                                const detail::SegmentIterates& its,
                                                double x0, double x1) {
    ConvergenceReport rep;
    const int grid = 101;
    auto grid_x = [&](int i) { return x0 + (x1 - x0) * i / (grid - 1); };

    for (std::size_t k = 1; k < its.iterates.size(); ++k) {
        double sup = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double x = grid_x(i);
            sup = std::max(sup, (its.iterates[k](x) - its.iterates[k - 1](x)).norm());
        }
        rep.sup_diffs.push_back(sup);
    }

    const double c = std::max(std::abs(x0), std::abs(x1));
    rep.M_est = std::exp(2.0 * c * op_norm(sys.A));

    // Sampled bound on ||G|| along the seed and a finite-difference Lipschitz
    // estimate of G in y around it.
    const int n = sys.dim;
    double H = 0.0, K = 0.0;
    for (int i = 0; i < 21; ++i) {
        const double x = x0 + (x1 - x0) * i / 20.0;
        const Vec y = its.iterates.front()(x);
        const Vec g0 = sys.eval_g(x, y);
        H = std::max(H, g0.norm());
        Mat J(n, n);
        for (int j = 0; j < n; ++j) {
            const double d = 1e-6 * (1.0 + std::abs(y(j)));
            Vec yp = y, ym = y;
            yp(j) += d;
            ym(j) -= d;
            J.col(j) = (sys.eval_g(x, yp) - sys.eval_g(x, ym)) / (2.0 * d);
        }
        K = std::max(K, op_norm(J));
    }
    rep.H_est = H;
    rep.K_est = K;

    double factorial = 1.0;
    for (std::size_t k = 1; k <= rep.sup_diffs.size(); ++k) {
        factorial *= static_cast<double>(k);
        const double bound = H * std::pow(rep.M_est * K * (x1 - x0), static_cast<double>(k)) / factorial;
        rep.bound_ok.push_back(rep.sup_diffs[k - 1] <= bound);
    }
    return rep;
}

namespace detail {

inline CurveSegment store_segment(const SegmentIterates& its, double x0, double x1,
                                  const SolveSettings& settings) {
    const int degree = settings.backend == Backend::quadrature
                           ? std::max(3, settings.quad_points - 1)
                           : 12;
    return chebyshev_fit_segment(x0, x1, degree, its.final());
}

}  // namespace detail

/// One segment of the Extended Picard iteration, with diagnostics.
inline std::pair<PiecewiseCurve, ConvergenceReport> picard_iterate_segment(
    const OdeSystem& sys, double x0, const Vec& y0, double x1,
    const SolveSettings& settings, CurveFn seed = {}) {
    settings.validate();
    if (!(x1 > x0)) throw std::invalid_argument("picard_iterate_segment: x1 must exceed x0");
    if (!y0.allFinite()) throw std::invalid_argument("picard_iterate_segment: non-finite y0");

    auto its = detail::iterate_segment_core(sys, x0, y0, x1, settings, std::move(seed));
    PiecewiseCurve curve;
    curve.nodes = {x0, x1};
    curve.segments.push_back(detail::store_segment(its, x0, x1, settings));
    return {std::move(curve), convergence_diagnostic(sys, its, x0, x1)};
}

/// Standard Picard on one segment: same contract with A forced to zero.
inline PiecewiseCurve standard_picard_iterate_segment(const OdeSystem& sys, double x0,
                                                      const Vec& y0, double x1,
                                                      const SolveSettings& settings,
                                                      CurveFn seed = {}) {
    return picard_iterate_segment(zero_split(sys), x0, y0, x1, settings, std::move(seed)).first;
}

/// Segmentary integration: run the per-segment iteration over [a,b], carrying
/// each segment's approximate end value as the next initial value.
inline PiecewiseCurve solve_segmented(const OdeSystem& sys, double a, double b, const Vec& y_a,
                                      const SolveSettings& settings) {
    settings.validate();
    if (!(b > a)) throw std::invalid_argument("solve_segmented: b must exceed a");
    if (!y_a.allFinite()) throw std::invalid_argument("solve_segmented: non-finite initial value");

    const int m = detail::segment_count(a, b, settings.h);
    PiecewiseCurve curve;
    curve.nodes.push_back(a);

    Vec y = y_a;
    CurveFn carried_seed;  // previous segment's final iterate when requested
    for (int s = 0; s < m; ++s) {
        const double x0 = a + s * settings.h;
        const double x1 = (s == m - 1) ? b : a + (s + 1) * settings.h;
        detail::SegmentIterates its;
        CurveFn seed = carried_seed;
        if (settings.seed_constant) seed = [y](double) -> Vec { return y; };
        try {
            its = detail::iterate_segment_core(sys, x0, y, x1, settings, seed, s);
        } catch (divergence_error& e) {
            throw divergence_error(std::string(e.what()) + " on segment " + std::to_string(s),
                                   e.iteration, s);
        }
        CurveSegment seg = detail::store_segment(its, x0, x1, settings);
        y = seg.eval(x1);  // the carried initial value is the stored end value
        detail::check_finite_bounded(y, settings.divergence_limit, settings.n_iter, s);
        curve.nodes.push_back(x1);
        curve.segments.push_back(std::move(seg));
        if (settings.seed_previous) carried_seed = [f = its.final()](double x) { return f(x); };
    }
    return curve;
}

/// Standard Picard over [a,b] (A = 0 split of the same system).
inline PiecewiseCurve standard_picard_solve_segmented(const OdeSystem& sys, double a, double b,
                                                      const Vec& y_a,
                                                      const SolveSettings& settings) {
    return solve_segmented(zero_split(sys), a, b, y_a, settings);
}

/// Homogeneous seed through (x0, y0): x -> e^{(x-x0)A} y0.
inline CurveFn homogeneous_seed(const OdeSystem& sys, double x0, Vec y0) {
    if (!y0.allFinite()) throw std::invalid_argument("homogeneous_seed: non-finite y0");
    return [A = sys.A, x0, y0 = std::move(y0)](double x) -> Vec {
        return mat_exp(A, x - x0) * y0;
    };
}

/// Constant seed, used by the Mathieu eigenvalue search and the Bratu
/// shooting.
inline CurveFn constant_seed(Vec y0) {
    return [y0 = std::move(y0)](double) -> Vec { return y0; };
}

}  // namespace picard
