#pragma once

// Fixed-step reference integrators: the 12-stage order-8 Dormand-Prince
// scheme (the advancing formula of DOP853, coefficients from Hairer,
// Norsett & Wanner) and a Taylor-series method of selectable order driven
// by jet arithmetic.

#include <array>
#include <cmath>
#include <vector>

#include "picard/curve.hpp"
#include "picard/errors.hpp"
#include "picard/jet.hpp"
#include "picard/ode_system.hpp"

namespace picard {

namespace detail {

struct Dop8Tableau {
    static constexpr int stages = 12;
    std::array<double, stages> c{};
    std::array<std::array<double, stages>, stages> a{};
    std::array<double, stages> b{};

    Dop8Tableau() {
        c = {0.0,
             0.526001519587677318785587544488e-01,
             0.789002279381515978178381316732e-01,
             0.118350341907227396726757197510e+00,
             0.281649658092772603273242802490e+00,
             0.333333333333333333333333333333e+00,
             0.25e+00,
             0.307692307692307692307692307692e+00,
             0.651282051282051282051282051282e+00,
             0.6e+00,
             0.857142857142857142857142857142e+00,
             1.0};
        auto& A = a;
        A[1][0] = 5.26001519587677318785587544488e-2;
        A[2][0] = 1.97250569845378994544595329183e-2;
        A[2][1] = 5.91751709536136983633785987549e-2;
        A[3][0] = 2.95875854768068491816892993775e-2;
        A[3][2] = 8.87627564304205475450678981324e-2;
        A[4][0] = 2.41365134159266685502369798665e-1;
        A[4][2] = -8.84549479328286085344864962717e-1;
        A[4][3] = 9.24834003261792003115737966543e-1;
        A[5][0] = 3.7037037037037037037037037037e-2;
        A[5][3] = 1.70828608729473871279604482173e-1;
        A[5][4] = 1.25467687566822425016691814123e-1;
        A[6][0] = 3.7109375e-2;
        A[6][3] = 1.70252211019544039314978060272e-1;
        A[6][4] = 6.02165389804559606850219397283e-2;
        A[6][5] = -1.7578125e-2;
        A[7][0] = 3.70920001185047927108779319836e-2;
        A[7][3] = 1.70383925712239993810214054705e-1;
        A[7][4] = 1.07262030446373284651809199168e-1;
        A[7][5] = -1.53194377486244017527936158236e-2;
        A[7][6] = 8.27378916381402288758473766002e-3;
        A[8][0] = 6.24110958716075717114429577812e-1;
        A[8][3] = -3.36089262944694129406857109825e0;
        A[8][4] = -8.68219346841726006818189891453e-1;
        A[8][5] = 2.75920996994467083049415600797e1;
        A[8][6] = 2.01540675504778934086186788979e1;
        A[8][7] = -4.34898841810699588477366255144e1;
        A[9][0] = 4.77662536438264365890433908527e-1;
        A[9][3] = -2.48811461997166764192642586468e0;
        A[9][4] = -5.90290826836842996371446475743e-1;
        A[9][5] = 2.12300514481811942347288949897e1;
        A[9][6] = 1.52792336328824235832596922938e1;
        A[9][7] = -3.32882109689848629194453265587e1;
        A[9][8] = -2.03312017085086261358222928593e-2;
        A[10][0] = -9.3714243008598732571704021658e-1;
        A[10][3] = 5.18637242884406370830023853209e0;
        A[10][4] = 1.09143734899672957818500254654e0;
        A[10][5] = -8.14978701074692612513997267357e0;
        A[10][6] = -1.85200656599969598641566180701e1;
        A[10][7] = 2.27394870993505042818970056734e1;
        A[10][8] = 2.49360555267965238987089396762e0;
        A[10][9] = -3.0467644718982195003823669022e0;
        A[11][0] = 2.27331014751653820792359768449e0;
        A[11][3] = -1.05344954667372501984066689879e1;
        A[11][4] = -2.00087205822486249909675718444e0;
        A[11][5] = -1.79589318631187989172765950534e1;
        A[11][6] = 2.79488845294199600508499808837e1;
        A[11][7] = -2.85899827713502369474065508674e0;
        A[11][8] = -8.87285693353062954433549289258e0;
        A[11][9] = 1.23605671757943030647266201528e1;
        A[11][10] = 6.43392746015763530355970484046e-1;
        b = {5.42937341165687622380535766363e-2, 0.0, 0.0, 0.0, 0.0,
             4.45031289275240888144113950566e0,
             1.89151789931450038304281599044e0,
             -5.8012039600105847814672114227e0,
             3.1116436695781989440891606237e-1,
             -1.52160949662516078556178806805e-1,
             2.01365400804030348374776537501e-1,
             4.47106157277725905176885569043e-2};
    }
};

inline const Dop8Tableau& dop8_tableau() {
    static const Dop8Tableau t;
    return t;
}

/// Cubic Hermite segment from endpoint values and derivatives.
inline CurveSegment hermite_segment(double x0, double x1, const Vec& y0, const Vec& f0,
                                    const Vec& y1, const Vec& f1) {
    const double h = x1 - x0;
    CurveSegment seg;
    seg.x0 = x0;
    seg.x1 = x1;
    seg.basis = SegmentBasis::monomial;
    seg.coeffs.resize(4);
    seg.coeffs[0] = y0;
    seg.coeffs[1] = h * f0;
    seg.coeffs[2] = 3.0 * (y1 - y0) - h * (2.0 * f0 + f1);
    seg.coeffs[3] = 2.0 * (y0 - y1) + h * (f0 + f1);
    return seg;
}

}  // namespace detail

/// Explicit order-8 Runge-Kutta over [a,b] with a fixed step. Each step is
/// internally split into `substeps` substeps; dense output is a cubic Hermite
/// on every substep, so the interpolation error stays far below the scheme's
/// truncation error.
inline PiecewiseCurve rk8_solve(const OdeSystem& sys, double a, double b, const Vec& y_a,
                                double step, int substeps = 8) {
    if (!(step > 0.0)) throw std::invalid_argument("rk8_solve: step must be > 0");
    if (substeps < 1) throw std::invalid_argument("rk8_solve: substeps must be >= 1");
    if (!y_a.allFinite()) throw std::invalid_argument("rk8_solve: non-finite initial value");
    const auto& tb = detail::dop8_tableau();
    const int S = detail::Dop8Tableau::stages;

    const double hsub = step / substeps;
    const int nsteps = std::max(1, static_cast<int>(std::ceil((b - a) / hsub - 1e-12)));

    PiecewiseCurve curve;
    curve.nodes.reserve(nsteps + 1);
    curve.segments.reserve(nsteps);
    curve.nodes.push_back(a);

    Vec y = y_a;
    Vec fy = sys.eval_rhs(a, y);
    std::vector<Vec> k(S);
    for (int n = 0; n < nsteps; ++n) {
        const double x0 = a + n * hsub;
        const double x1 = (n == nsteps - 1) ? b : a + (n + 1) * hsub;
        const double h = x1 - x0;
        k[0] = fy;
        for (int i = 1; i < S; ++i) {
            Vec yi = y;
            for (int j = 0; j < i; ++j)
                if (tb.a[i][j] != 0.0) yi += (h * tb.a[i][j]) * k[j];
            k[i] = sys.eval_rhs(x0 + tb.c[i] * h, yi);
        }
        Vec ynext = y;
        for (int i = 0; i < S; ++i)
            if (tb.b[i] != 0.0) ynext += (h * tb.b[i]) * k[i];
        if (!ynext.allFinite())
            throw divergence_error("rk8_solve: non-finite state", n);
        Vec fnext = sys.eval_rhs(x1, ynext);
        curve.segments.push_back(detail::hermite_segment(x0, x1, y, fy, ynext, fnext));
        curve.nodes.push_back(x1);
        y = std::move(ynext);
        fy = std::move(fnext);
    }
    return curve;
}

/// Taylor-series method: per step, propagate a jet of the requested order
/// through the right-hand side and advance by evaluating the series. The
/// per-step series doubles as dense output.
inline PiecewiseCurve taylor_solve(const OdeSystem& sys, double a, double b, const Vec& y_a,
                                   double step, int order) {
    if (!(step > 0.0)) throw std::invalid_argument("taylor_solve: step must be > 0");
    if (order < 2) throw std::invalid_argument("taylor_solve: order must be >= 2");
    if (!sys.jet_rhs)
        throw unsupported_operation_error("taylor_solve: system provides no jet right-hand side");
    if (!y_a.allFinite()) throw std::invalid_argument("taylor_solve: non-finite initial value");

    const int n = sys.dim;
    const int nsteps = std::max(1, static_cast<int>(std::ceil((b - a) / step - 1e-12)));

    PiecewiseCurve curve;
    curve.nodes.reserve(nsteps + 1);
    curve.segments.reserve(nsteps);
    curve.nodes.push_back(a);

    Vec y = y_a;
    std::vector<Jet> jets(n), djets(n);
    for (int s = 0; s < nsteps; ++s) {
        const double x0 = a + s * step;
        const double x1 = (s == nsteps - 1) ? b : a + (s + 1) * step;
        const double h = x1 - x0;

        for (int i = 0; i < n; ++i) jets[i] = Jet(order, y(i));
        for (int m = 0; m < order; ++m) {
            sys.jet_rhs(x0, jets, djets);
            for (int i = 0; i < n; ++i) jets[i][m + 1] = djets[i][m] / (m + 1);
        }

        CurveSegment seg;
        seg.x0 = x0;
        seg.x1 = x1;
        seg.basis = SegmentBasis::monomial;
        seg.coeffs.assign(order + 1, Vec::Zero(n));
        double hp = 1.0;
        for (int m = 0; m <= order; ++m) {
            for (int i = 0; i < n; ++i) seg.coeffs[m](i) = jets[i][m] * hp;
            hp *= h;
        }
        for (int i = 0; i < n; ++i) y(i) = jets[i].eval(h);
        if (!y.allFinite()) throw divergence_error("taylor_solve: non-finite state", s);
        curve.segments.push_back(std::move(seg));
        curve.nodes.push_back(x1);
    }
    return curve;
}

}  // namespace picard
