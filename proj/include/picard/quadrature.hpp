#pragma once

// Gauss-Legendre rules and Chebyshev node sets shared by the engine and tests.

#include <cmath>
#include <numbers>
#include <vector>

namespace picard {

struct QuadRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1,1], nodes by Newton on P_n.
inline QuadRule gauss_legendre(int n) {
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

/// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
template <class F>
auto gauss_legendre_integrate(const F& f, double a, double b, const QuadRule& rule)
    -> decltype(f(a)) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto acc = f(mid + half * rule.nodes[0]);
    acc *= rule.weights[0];
    for (std::size_t i = 1; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    acc *= half;
    return acc;
}

/// m Chebyshev-Gauss points on [a,b] (interior, ascending).
inline std::vector<double> chebyshev_gauss_points(int m, double a, double b) {
    std::vector<double> pts(m);
    for (int j = 0; j < m; ++j) {
        const double t = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * m));
        pts[m - 1 - j] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    }
    return pts;
}

/// m+1 Chebyshev-Lobatto points on [a,b] (endpoints included, ascending).
inline std::vector<double> chebyshev_lobatto_points(int m, double a, double b) {
    std::vector<double> pts(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double t = std::cos(std::numbers::pi * i / m);
        pts[m - i] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    }
    pts.front() = a;
    pts.back() = b;
    return pts;
}

}  // namespace picard
