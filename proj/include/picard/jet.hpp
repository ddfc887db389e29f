#pragma once

// Truncated power series (jets) used by the Taylor reference solver.
// A Jet holds coefficients of a series in t about the current abscissa,
// truncated at a fixed order.

#include <cmath>
#include <vector>

#include "picard/errors.hpp"

namespace picard {

class Jet {
public:
    Jet() = default;
    explicit Jet(int order, double c0 = 0.0) : c_(order + 1, 0.0) { c_[0] = c0; }

    /// Jet of the independent variable: x0 + t.
    static Jet variable(double x0, int order) {
        Jet j(order, x0);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }
    double value() const { return c_[0]; }

    /// Evaluate the truncated series at step t.
    double eval(double t) const {
        double acc = c_.back();
        for (int k = order() - 1; k >= 0; --k) acc = c_[k] + t * acc;
        return acc;
    }

    Jet operator-() const {
        Jet r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Jet& operator+=(double s) { c_[0] += s; return *this; }
    Jet& operator-=(double s) { c_[0] -= s; return *this; }
    Jet& operator*=(double s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator+(double s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, double s) { return a -= s; }
    friend Jet operator-(double s, const Jet& a) { return -a + s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator*(Jet a, double s) { return a *= s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        const int p = a.order();
        Jet r(p);
        for (int k = 0; k <= p; ++k) {
            double s = 0.0;
            for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
            r.c_[k] = s;
        }
        return r;
    }

private:
    std::vector<double> c_;
};

inline Jet jet_pow(const Jet& a, int n) {
    if (n < 0) throw unsupported_operation_error("jet_pow: negative exponent");
    Jet r(a.order(), 1.0);
    Jet base = a;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

inline Jet jet_exp(const Jet& u) {
    const int p = u.order();
    Jet e(p, std::exp(u[0]));
    for (int k = 1; k <= p; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * u[j] * e[k - j];
        e[k] = s / k;
    }
    return e;
}

struct JetSinCos {
    Jet sin;
    Jet cos;
};

inline JetSinCos jet_sin_cos(const Jet& u) {
    const int p = u.order();
    JetSinCos r{Jet(p, std::sin(u[0])), Jet(p, std::cos(u[0]))};
    for (int k = 1; k <= p; ++k) {
        double s = 0.0, c = 0.0;
        for (int j = 1; j <= k; ++j) {
            s += j * u[j] * r.cos[k - j];
            c += j * u[j] * r.sin[k - j];
        }
        r.sin[k] = s / k;
        r.cos[k] = -c / k;
    }
    return r;
}

inline Jet jet_sin(const Jet& u) { return jet_sin_cos(u).sin; }
inline Jet jet_cos(const Jet& u) { return jet_sin_cos(u).cos; }

}  // namespace picard
