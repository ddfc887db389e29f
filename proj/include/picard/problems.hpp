#pragma once

// The five benchmark systems with their canonical linear splits, reference
// solutions, eigenvalue/shooting drivers and fixed-point stability analysis.

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "picard/jet.hpp"
#include "picard/ode_system.hpp"
#include "picard/picard.hpp"
#include "picard/rootfind.hpp"

namespace picard {

// ---------------------------------------------------------------------------
// Mathieu:  y'' + (r - 2q cos 2x) y = 0
// ---------------------------------------------------------------------------

inline OdeSystem mathieu_system(double r, double q) {
    Mat A(2, 2);
    A << 0, 1, -r, 0;
    RhsFn rhs = [r, q](double x, const Vec& y) -> Vec {
        Vec d(2);
        d << y(1), -(r - 2.0 * q * std::cos(2.0 * x)) * y(0);
        return d;
    };
    JetRhsFn jet = [r, q](double x0, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        const Jet cos2x = jet_cos(2.0 * Jet::variable(x0, y[0].order()));
        dy[0] = y[1];
        dy[1] = -r * y[0] + 2.0 * q * (cos2x * y[0]);
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

/// Truncated characteristic-value series r_1..r_5 in powers of q.
inline double mathieu_char_series(double q, int index) {
    const double q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q5 = q4 * q, q6 = q4 * q2;
    switch (index) {
        case 1: return 1.0 - q - q2 / 8.0 + q3 / 64.0 - q4 / 1536.0;
        case 2: return 4.0 + 5.0 / 12.0 * q2 - 763.0 / 13824.0 * q4 + 1002401.0 / 79626240.0 * q6;
        case 3: return 9.0 + q2 / 16.0 - q3 / 64.0 + 13.0 / 20480.0 * q4;
        case 4: return 16.0 + q2 / 30.0 + 433.0 / 864000.0 * q4 - 5701.0 / 2721600000.0 * q6;
        case 5: return 25.0 + q2 / 48.0 + 11.0 / 774144.0 * q4 - q5 / 147456.0;
        default: throw std::invalid_argument("mathieu_char_series: index must be in 1..5");
    }
}

namespace detail {

/// y_n(pi; r) for the eigenvalue search: initial data (0,1), constant seed
/// (0,1), non-segmented iteration on [0,pi].
inline double mathieu_shoot_pi(double r, double q, int n_iter, int quad_points = 20) {
    const OdeSystem sys = mathieu_system(r, q);
    SolveSettings st;
    st.h = std::numbers::pi;
    st.n_iter = n_iter;
    st.backend = Backend::quadrature;
    st.quad_points = quad_points;
    Vec y0(2);
    y0 << 0.0, 1.0;
    auto its = detail::iterate_segment_core(sys, 0.0, y0, std::numbers::pi, st, constant_seed(y0));
    return its.final()(std::numbers::pi)(0);
}

}  // namespace detail

/// First `count` characteristic values for |q| <= 1: scan r over [0,30] in
/// steps of 0.25 for sign changes of y_n(pi; r) and refine each bracket.
inline std::vector<double> mathieu_char_values(double q, int n_iter, int count) {
    if (count < 1 || count > 5)
        throw std::invalid_argument("mathieu_char_values: count must be in 1..5");
    std::vector<double> roots;
    const double step = 0.25;
    auto f = [&](double r) { return detail::mathieu_shoot_pi(r, q, n_iter); };
    double r_prev = 0.0;
    double f_prev = f(r_prev);
    for (double r = step; r <= 30.0 + 1e-9 && static_cast<int>(roots.size()) < count; r += step) {
        const double fr = f(r);
        if (f_prev == 0.0) {
            roots.push_back(r_prev);
        } else if (f_prev * fr < 0.0) {
            roots.push_back(find_root_bracketed(f, r_prev, r, 0.0, 200));
        }
        r_prev = r;
        f_prev = fr;
    }
    if (static_cast<int>(roots.size()) < count)
        throw insufficient_roots_error("mathieu_char_values: fewer roots than requested");
    roots.resize(count);
    return roots;
}

// ---------------------------------------------------------------------------
// Quintic Duffing:  y'' = -y - a y^5
// ---------------------------------------------------------------------------

inline OdeSystem duffing_system(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("duffing_system: a must be > 0");
    Mat A(2, 2);
    A << 0, 1, -1, 0;
    RhsFn rhs = [a](double, const Vec& y) -> Vec {
        Vec d(2);
        d << y(1), -y(0) - a * std::pow(y(0), 5);
        return d;
    };
    JetRhsFn jet = [a](double, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0] - a * jet_pow(y[0], 5);
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

// ---------------------------------------------------------------------------
// Bratu:  y'' + alpha e^y = 0, y(0)=y(1)=0, quadratic truncation
// ---------------------------------------------------------------------------

inline OdeSystem bratu_quadratic_system(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("bratu_quadratic_system: alpha must be > 0");
    Mat A(2, 2);
    A << 0, 1, -alpha, 0;
    RhsFn rhs = [alpha](double, const Vec& y) -> Vec {
        Vec d(2);
        d << y(1), -alpha * (1.0 + y(0) + 0.5 * y(0) * y(0));
        return d;
    };
    JetRhsFn jet = [alpha](double, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        dy[0] = y[1];
        dy[1] = -alpha * (1.0 + y[0] + 0.5 * (y[0] * y[0]));
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

/// Exact solution of the full Bratu problem for a given theta root.
inline double bratu_exact(double theta, double x) {
    return -2.0 * std::log(std::cosh(0.5 * (x - 0.5) * theta) / std::cosh(0.25 * theta));
}

/// All roots of theta = sqrt(2 alpha) cosh(theta/4) on (0,50): two below the
/// critical alpha, one at it, none above (an empty list is a valid return).
inline std::vector<double> bratu_exact_theta(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("bratu_exact_theta: alpha must be > 0");
    auto f = [alpha](double th) { return th - std::sqrt(2.0 * alpha) * std::cosh(0.25 * th); };
    std::vector<double> roots;
    const int n = 2000;
    double t0 = 1e-8, f0 = f(t0);
    for (int i = 1; i <= n; ++i) {
        const double t1 = 50.0 * i / n;
        const double f1 = f(t1);
        if (f0 == 0.0)
            roots.push_back(t0);
        else if (f0 * f1 < 0.0)
            roots.push_back(find_root_bracketed(f, t0, t1, 0.0, 200));
        t0 = t1;
        f0 = f1;
    }
    return roots;
}

/// Critical alpha where the two theta roots merge (joint condition with
/// 4 = sqrt(2 alpha) sinh(theta/4)).
inline double bratu_alpha_critical() {
    auto g = [](double th) { return th * std::tanh(0.25 * th) - 4.0; };
    const double th = find_root_bracketed(g, 1.0, 20.0, 0.0, 200);
    const double ch = std::cosh(0.25 * th);
    return th * th / (2.0 * ch * ch);
}

/// The VIM second iterate H_2(x) with free parameter k.
inline double bratu_vim_reference(double x, double k) {
    const double k2 = k * k;
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
    const double x6 = x4 * x2, x7 = x6 * x, x8 = x4 * x4, x9 = x8 * x, x10 = x8 * x2;
    return k * x - x2 / 2.0 - x3 / 6.0 - (k2 - 1.0) * x4 / 24.0 + 4.0 * x5 / 120.0 +
           (5.0 * k2 - 3.0) * x6 / 720.0 + 5.0 * k * (k2 - 2.0) * x7 / 5040.0 -
           25.0 * k2 * x8 / 40320.0 - 35.0 * k2 * k * x9 / 362880.0 -
           35.0 * k2 * k2 * x10 / 3628800.0;
}

/// Shooting on the initial slope u so that y(1; u) = 0, using the Extended
/// Picard solve with the constant seed (0, u). A non-segmented run
/// (h >= 1) uses the quadrature backend on the single segment [0,1].
inline std::pair<double, PiecewiseCurve> bratu_shoot(double alpha, int n_iter,
                                                     SolveSettings settings) {
    settings.n_iter = n_iter;
    const OdeSystem sys = bratu_quadratic_system(alpha);
    auto solve_for = [&](double u) -> PiecewiseCurve {
        Vec y0(2);
        y0 << 0.0, u;
        if (settings.h >= 1.0) {
            return picard_iterate_segment(sys, 0.0, y0, 1.0, settings, constant_seed(y0)).first;
        }
        return solve_segmented(sys, 0.0, 1.0, y0, settings);
    };
    auto target = [&](double u) { return solve_for(u).eval(1.0)(0); };
    double u;
    try {
        u = find_root_secant(target, 0.5, 0.6, 1e-10, 50);
    } catch (const root_not_found_error& e) {
        throw shooting_failure_error(std::string("bratu_shoot: ") + e.what());
    }
    return {u, solve_for(u)};
}

// ---------------------------------------------------------------------------
// Glycolysis:  y' = -y + a z + z y^2,  z' = b - a z - z y^2
// ---------------------------------------------------------------------------

inline OdeSystem glycolysis_system(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("glycolysis_system: a, b must be > 0");
    Mat A(2, 2);
    A << -1, a, 0, -a;
    RhsFn rhs = [a, b](double, const Vec& y) -> Vec {
        Vec d(2);
        const double f = a * y(1) + y(1) * y(0) * y(0);
        d << -y(0) + f, b - f;
        return d;
    };
    JetRhsFn jet = [a, b](double, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        const Jet f = a * y[1] + y[1] * (y[0] * y[0]);
        dy[0] = -y[0] + f;
        dy[1] = b - f;
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

enum class Stability { asymptotically_stable, unstable };

struct StabilityReport {
    Vec fixed_point;
    double jacobian_trace = 0.0;
    double jacobian_det = 0.0;
    Stability classification = Stability::asymptotically_stable;
};

inline StabilityReport glycolysis_stability(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("glycolysis_stability: a, b must be > 0");
    StabilityReport rep;
    rep.fixed_point = Vec(2);
    rep.fixed_point << b, b / (a + b * b);
    rep.jacobian_det = a + b * b;
    const double b2 = b * b;
    rep.jacobian_trace = -(b2 * b2 + (2.0 * a - 1.0) * b2 + a * (1.0 + a)) / rep.jacobian_det;
    rep.classification =
        rep.jacobian_trace > 0.0 ? Stability::unstable : Stability::asymptotically_stable;
    return rep;
}

/// The instability band b_-(a) < b < b_+(a), defined for 0 < a < 1/8
/// (coincident at a = 1/8).
inline std::pair<double, double> glycolysis_hopf_band(double a) {
    if (!(a > 0.0) || a > 0.125)
        throw std::invalid_argument("glycolysis_hopf_band: requires 0 < a <= 1/8");
    const double disc = std::sqrt(std::max(0.0, 1.0 - 8.0 * a));
    const double bm = std::sqrt((1.0 - 2.0 * a - disc) / 2.0);
    const double bp = std::sqrt((1.0 - 2.0 * a + disc) / 2.0);
    return {bm, bp};
}

// ---------------------------------------------------------------------------
// Brusselator:  y' = 1 - (1+b) y + a y^2 z,  z' = b y - a y^2 z
// ---------------------------------------------------------------------------

inline OdeSystem brusselator_system(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("brusselator_system: a, b must be > 0");
    Mat A(2, 2);
    A << -(1.0 + b), 0, b, 0;
    RhsFn rhs = [a, b](double, const Vec& y) -> Vec {
        Vec d(2);
        const double f = a * y(0) * y(0) * y(1);
        d << 1.0 - (1.0 + b) * y(0) + f, b * y(0) - f;
        return d;
    };
    JetRhsFn jet = [a, b](double, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        const Jet f = a * ((y[0] * y[0]) * y[1]);
        dy[0] = 1.0 - (1.0 + b) * y[0] + f;
        dy[1] = b * y[0] - f;
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

/// Fixed-point data computed directly from the right-hand side: the fixed
/// point is (1, b/a) with det a and trace b-1-a. (The published values
/// (1, b-a-1), det 1, differ; the stability boundary b = 1+a is the same
/// either way. See README.)
inline StabilityReport brusselator_stability(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("brusselator_stability: a, b must be > 0");
    StabilityReport rep;
    rep.fixed_point = Vec(2);
    rep.fixed_point << 1.0, b / a;
    rep.jacobian_det = a;
    rep.jacobian_trace = b - 1.0 - a;
    rep.classification =
        rep.jacobian_trace > 0.0 ? Stability::unstable : Stability::asymptotically_stable;
    return rep;
}

/// Brusselator in the w = y+z variable: w'' + a w = F(w, w').
inline OdeSystem brusselator_w_system(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("brusselator_w_system: a, b must be > 0");
    Mat A(2, 2);
    A << 0, 1, -a, 0;
    RhsFn rhs = [a, b](double, const Vec& y) -> Vec {
        const double w = y(0), v = y(1);
        const double F = a + b - (1.0 + b + a * (3.0 - 2.0 * w)) * v - a * (w - 3.0) * v * v -
                         a * v * v * v;
        Vec d(2);
        d << v, -a * w + F;
        return d;
    };
    JetRhsFn jet = [a, b](double, const std::vector<Jet>& y, std::vector<Jet>& dy) {
        const Jet& w = y[0];
        const Jet& v = y[1];
        const Jet v2 = v * v;
        const Jet F = (a + b) - (((1.0 + b) + a * (3.0 - 2.0 * w)) * v) - a * ((w - 3.0) * v2) -
                      a * (v2 * v);
        dy[0] = v;
        dy[1] = -a * w + F;
    };
    return split_system(std::move(rhs), 2, A, std::move(jet));
}

// ---------------------------------------------------------------------------
// Named problem construction (CLI / harness)
// ---------------------------------------------------------------------------

struct ProblemSpec {
    std::string name;                      // mathieu, duffing, bratu, glycolysis,
                                           // brusselator, brusselator-w
    std::map<std::string, double> params;  // q, r, a, b, alpha as applicable
    Vec initial;                           // initial value (or (0,u) for bratu)
    double a = 0.0, b = 1.0;               // default integration interval
};

inline double require_param(const ProblemSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end() || !std::isfinite(it->second))
        throw std::invalid_argument("problem '" + spec.name + "' needs finite parameter '" + key +
                                    "'");
    return it->second;
}

inline OdeSystem make_system(const ProblemSpec& spec) {
    if (spec.name == "mathieu")
        return mathieu_system(require_param(spec, "r"), require_param(spec, "q"));
    if (spec.name == "duffing") return duffing_system(require_param(spec, "a"));
    if (spec.name == "bratu") return bratu_quadratic_system(require_param(spec, "alpha"));
    if (spec.name == "glycolysis")
        return glycolysis_system(require_param(spec, "a"), require_param(spec, "b"));
    if (spec.name == "brusselator")
        return brusselator_system(require_param(spec, "a"), require_param(spec, "b"));
    if (spec.name == "brusselator-w")
        return brusselator_w_system(require_param(spec, "a"), require_param(spec, "b"));
    throw std::invalid_argument("unknown problem '" + spec.name + "'");
}

/// Canonical experiment setup for a named problem (the configurations the
/// error tables use).
inline ProblemSpec default_problem(const std::string& name) {
    ProblemSpec spec;
    spec.name = name;
    spec.initial = Vec(2);
    if (name == "mathieu") {
        spec.params = {{"r", 1.0}, {"q", 0.05}};
        spec.initial << 1.0, 0.0;
        spec.a = 0.0;
        spec.b = 2.0 * std::numbers::pi;
    } else if (name == "duffing") {
        spec.params = {{"a", 0.5}};
        spec.initial << 1.0, 0.0;
        spec.a = 0.0;
        spec.b = 7.0;
    } else if (name == "bratu") {
        spec.params = {{"alpha", 1.0}};
        spec.initial << 0.0, 0.549249;
        spec.a = 0.0;
        spec.b = 1.0;
    } else if (name == "glycolysis") {
        spec.params = {{"a", 0.4}, {"b", 0.6}};
        spec.initial << 1.0, 1.0;
        spec.a = 0.0;
        spec.b = 40.0;
    } else if (name == "brusselator") {
        spec.params = {{"a", 1.0}, {"b", 2.5}};
        spec.initial << 1.8, 1.2;
        spec.a = 0.0;
        spec.b = 15.0;
    } else if (name == "brusselator-w") {
        spec.params = {{"a", 1.0}, {"b", 2.5}};
        spec.initial << 3.0, -0.8;  // w = y+z, w' = 1-y for the original (1.8, 1.2)
        spec.a = 0.0;
        spec.b = 15.0;
    } else {
        throw std::invalid_argument("unknown problem '" + name + "'");
    }
    return spec;
}

}  // namespace picard
