#pragma once

// Error metrics and the reproduction drivers for the benchmark error tables.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "picard/curve.hpp"
#include "picard/picard.hpp"
#include "picard/problems.hpp"
#include "picard/reference.hpp"
#include "picard/rootfind.hpp"

namespace picard {

/// Mean-square deviation (1/(b-a)) int_a^b (ref_i - cand_i)^2 dx by composite
/// Simpson on 2001 uniform samples. With mean_prefactor=false the 1/(b-a)
/// factor is omitted (the Bratu table convention).
inline double l2_mean_error(const PiecewiseCurve& reference, const PiecewiseCurve& candidate,
                            double a, double b, int component = 0, bool mean_prefactor = true) {
    const double slack = 1e-9 * (1.0 + std::abs(b - a));
    if (reference.a() > a + slack || reference.b() < b - slack || candidate.a() > a + slack ||
        candidate.b() < b - slack)
        throw std::invalid_argument("l2_mean_error: curves do not cover [a,b]");
    const int samples = 2001;  // even interval count for Simpson
    const double dx = (b - a) / (samples - 1);
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = a + i * dx;
        const double d =
            reference.eval(x)(component) - candidate.eval(x)(component);
        const double w = (i == 0 || i == samples - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += w * d * d;
    }
    acc *= dx / 3.0;
    if (mean_prefactor) acc /= (b - a);
    return acc;
}

struct ErrorTableRow {
    std::string method;
    double h = 0.0;
    int iterations = 0;
    int degree = 0;
    double error = 0.0;
};

struct ErrorTable {
    std::string table_id;
    std::string problem;
    double a = 0.0, b = 0.0;
    std::string reference;
    std::vector<ErrorTableRow> rows;

    const ErrorTableRow* find(const std::string& method, double h, int iterations,
                              int degree) const {
        for (const auto& r : rows)
            if (r.method == method && std::abs(r.h - h) < 1e-12 && r.iterations == iterations &&
                r.degree == degree)
                return &r;
        return nullptr;
    }
};

/// Optional overrides for reproduce_table (defaults follow the documented
/// configuration of each table).
struct TableOverrides {
    std::optional<double> ref_step;
    std::optional<int> fit_samples;
    std::optional<int> quad_points;
};

namespace detail {

inline PiecewiseCurve table_reference(const OdeSystem& sys, const ProblemSpec& spec,
                                      double ref_step) {
    return rk8_solve(sys, spec.a, spec.b, spec.initial, ref_step);
}

inline void append_taylor_rows(ErrorTable& table, const OdeSystem& sys, const ProblemSpec& spec,
                               const PiecewiseCurve& ref, const std::vector<double>& hs,
                               int order_lo, int order_hi) {
    for (double h : hs) {
        for (int order = order_lo; order <= order_hi; ++order) {
            const PiecewiseCurve sol = taylor_solve(sys, spec.a, spec.b, spec.initial, h, order);
            table.rows.push_back({"taylor", h, order, 0,
                                  l2_mean_error(ref, sol, spec.a, spec.b)});
        }
    }
}

inline void append_picard_rows(ErrorTable& table, const OdeSystem& sys, const ProblemSpec& spec,
                               const PiecewiseCurve& ref, const std::vector<double>& hs,
                               bool standard, const TableOverrides& ov,
                               bool constant_seed = false) {
    for (double h : hs) {
        for (int degree : {1, 3}) {
            for (int iter = 2; iter <= 5; ++iter) {
                SolveSettings st;
                st.h = h;
                st.n_iter = iter;
                st.fit_degree = degree;
                st.seed_constant = constant_seed;
                if (ov.fit_samples) st.fit_samples = *ov.fit_samples;
                PiecewiseCurve sol =
                    standard ? standard_picard_solve_segmented(sys, spec.a, spec.b, spec.initial, st)
                             : solve_segmented(sys, spec.a, spec.b, spec.initial, st);
                table.rows.push_back({standard ? "sp" : "ep", h, iter, degree,
                                      l2_mean_error(ref, sol, spec.a, spec.b)});
            }
        }
    }
}

}  // namespace detail

/// Run the documented configuration for one of the benchmark error tables
/// T1..T13 and return the populated table.
inline ErrorTable reproduce_table(const std::string& table_id, const TableOverrides& ov = {}) {
    ErrorTable table;
    table.table_id = table_id;
    table.reference = "rk8";

    auto setup = [&](const std::string& problem) {
        ProblemSpec spec = default_problem(problem);
        table.problem = problem;
        table.a = spec.a;
        table.b = spec.b;
        return spec;
    };

    if (table_id == "T1" || table_id == "T2") {
        const ProblemSpec spec = setup("mathieu");
        const OdeSystem sys = make_system(spec);
        const PiecewiseCurve ref = detail::table_reference(sys, spec, ov.ref_step.value_or(1e-3));
        if (table_id == "T1")
            detail::append_taylor_rows(table, sys, spec, ref, {0.1, 0.5}, 2, 5);
        else
            detail::append_picard_rows(table, sys, spec, ref, {0.1, 0.5}, false, ov);
        return table;
    }

    if (table_id == "T3") {
        // Characteristic-value deviations (percent) vs the truncated series.
        table.problem = "mathieu";
        table.reference = "char-series";
        const double q = 0.1;
        for (int iter = 1; iter <= 3; ++iter) {
            const auto roots = mathieu_char_values(q, iter, 5);
            for (int k = 1; k <= 5; ++k) {
                const double series = mathieu_char_series(q, k);
                const double dev = std::abs(roots[k - 1] - series) / series * 100.0;
                table.rows.push_back({"ep-eigen", 0.0, iter, k, dev});
            }
        }
        return table;
    }

    if (table_id == "T4" || table_id == "T5") {
        const ProblemSpec spec = setup("duffing");
        const OdeSystem sys = make_system(spec);
        const PiecewiseCurve ref = detail::table_reference(sys, spec, ov.ref_step.value_or(1e-3));
        if (table_id == "T4")
            detail::append_taylor_rows(table, sys, spec, ref, {0.1, 0.5}, 2, 5);
        else
            detail::append_picard_rows(table, sys, spec, ref, {0.1, 0.5}, false, ov);
        return table;
    }

    if (table_id == "T6") {
        // Bratu: second iterations of Extended Picard and VIM, plus RK8 and
        // Taylor-10 on the quadratic system, all vs the exact solution;
        // error without the mean prefactor.
        const ProblemSpec spec = setup("bratu");
        table.reference = "exact";
        const double alpha = 1.0;
        const auto thetas = bratu_exact_theta(alpha);
        if (thetas.empty()) throw solver_error("reproduce_table: no Bratu solution at alpha=1");
        const double theta = thetas.front();
        PiecewiseCurve exact;  // sampled exact solution as a reference curve
        exact.nodes = {0.0, 1.0};
        exact.segments.push_back(chebyshev_fit_segment(0.0, 1.0, 48, [&](double x) {
            Vec v(1);
            v << bratu_exact(theta, x);
            return v;
        }));

        auto err_vs_exact = [&](const PiecewiseCurve& cand) {
            PiecewiseCurve first;  // restrict candidate to its first component
            first.nodes = cand.nodes;
            for (const auto& seg : cand.segments) {
                CurveSegment s1 = seg;
                s1.coeffs.clear();
                for (const auto& c : seg.coeffs) {
                    Vec v(1);
                    v << c(0);
                    s1.coeffs.push_back(v);
                }
                first.segments.push_back(std::move(s1));
            }
            return l2_mean_error(exact, first, 0.0, 1.0, 0, /*mean_prefactor=*/false);
        };

        SolveSettings st;
        st.h = 1.0;
        st.backend = Backend::quadrature;
        st.quad_points = ov.quad_points.value_or(32);
        auto [u, ep_curve] = bratu_shoot(alpha, 2, st);
        table.rows.push_back({"ep", 1.0, 2, 0, err_vs_exact(ep_curve)});

        // The published VIM boundary constant. Note the printed H_2 polynomial
        // does not vanish at x=1 for this k (the zero sits near k=0.60999);
        // the published error value matches this constant, so it is kept.
        const double kvim = 0.546936690480377;
        PiecewiseCurve vim;
        vim.nodes = {0.0, 1.0};
        vim.segments.push_back(chebyshev_fit_segment(0.0, 1.0, 16, [&](double x) {
            Vec v(1);
            v << bratu_vim_reference(x, kvim);
            return v;
        }));
        table.rows.push_back({"vim", 1.0, 2, 0, err_vs_exact(vim)});

        const OdeSystem sys = bratu_quadratic_system(alpha);
        auto shoot_with = [&](auto solve) {
            const double us = find_root_secant(
                [&](double uu) {
                    Vec y0(2);
                    y0 << 0.0, uu;
                    return solve(y0).eval(1.0)(0);
                },
                0.5, 0.6, 1e-12, 50);
            Vec y0(2);
            y0 << 0.0, us;
            return solve(y0);
        };
        const PiecewiseCurve rk = shoot_with(
            [&](const Vec& y0) { return rk8_solve(sys, 0.0, 1.0, y0, 0.01); });
        table.rows.push_back({"rk8", 0.01, 0, 0, err_vs_exact(rk)});
        const PiecewiseCurve ty = shoot_with(
            [&](const Vec& y0) { return taylor_solve(sys, 0.0, 1.0, y0, 0.1, 10); });
        table.rows.push_back({"taylor", 0.1, 10, 0, err_vs_exact(ty)});
        return table;
    }

    if (table_id == "T7" || table_id == "T8" || table_id == "T9") {
        const ProblemSpec spec = setup("glycolysis");
        const OdeSystem sys = make_system(spec);
        const PiecewiseCurve ref = detail::table_reference(sys, spec, ov.ref_step.value_or(0.01));
        if (table_id == "T7")
            detail::append_taylor_rows(table, sys, spec, ref, {0.1}, 2, 5);
        else
            // The documented glycolysis configuration seeds each segment with
            // the constant initial value rather than the homogeneous flow.
            detail::append_picard_rows(table, sys, spec, ref, {0.1}, table_id == "T9", ov,
                                       /*constant_seed=*/true);
        return table;
    }

    if (table_id == "T10" || table_id == "T11") {
        const ProblemSpec spec = setup("brusselator");
        const OdeSystem sys = make_system(spec);
        const PiecewiseCurve ref = detail::table_reference(sys, spec, ov.ref_step.value_or(0.01));
        if (table_id == "T10")
            detail::append_taylor_rows(table, sys, spec, ref, {0.1}, 2, 5);
        else
            detail::append_picard_rows(table, sys, spec, ref, {0.1}, false, ov);
        return table;
    }

    if (table_id == "T12" || table_id == "T13") {
        const ProblemSpec spec = setup("brusselator-w");
        const OdeSystem sys = make_system(spec);
        const PiecewiseCurve ref = detail::table_reference(sys, spec, ov.ref_step.value_or(0.01));
        if (table_id == "T12")
            detail::append_taylor_rows(table, sys, spec, ref, {0.1}, 2, 5);
        else
            detail::append_picard_rows(table, sys, spec, ref, {0.1}, false, ov);
        return table;
    }

    throw std::invalid_argument("reproduce_table: unknown table id '" + table_id + "'");
}

}  // namespace picard
