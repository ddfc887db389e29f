#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "picard/linalg.hpp"
#include "picard/quadrature.hpp"

using namespace picard;

namespace {

Mat rot_generator() {
    Mat A(2, 2);
    A << 0, 1, -1, 0;
    return A;
}

Mat random_matrix(int n, std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = scale * dist(rng);
    return A;
}

}  // namespace

TEST_CASE("mat_exp basics") {
    std::mt19937 rng(7);
    Mat A = random_matrix(3, rng, 1.0);
    CHECK((mat_exp(A, 0.0) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    Mat N(2, 2);
    N << 0, 1, 0, 0;
    const double t = 0.37;
    Mat E = mat_exp(N, t);
    CHECK(E(0, 0) == doctest::Approx(1.0));
    CHECK(E(0, 1) == doctest::Approx(t));
    CHECK(E(1, 0) == doctest::Approx(0.0));
    CHECK(E(1, 1) == doctest::Approx(1.0));

    Mat R = mat_exp(rot_generator(), std::numbers::pi / 2);
    CHECK(std::abs(R(0, 0)) < 1e-15);
    CHECK(R(0, 1) == doctest::Approx(1.0));
    CHECK(R(1, 0) == doctest::Approx(-1.0));
    for (double t2 : {0.1, 1.0, 3.0}) {
        Mat Rt = mat_exp(rot_generator(), t2);
        CHECK(Rt(0, 0) == doctest::Approx(std::cos(t2)).epsilon(1e-13));
        CHECK(Rt(0, 1) == doctest::Approx(std::sin(t2)).epsilon(1e-13));
    }
}

TEST_CASE("mat_exp rejects non-finite input") {
    Mat A(2, 2);
    A << 1, std::nan(""), 0, 1;
    CHECK_THROWS_AS(mat_exp(A, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mat_exp(Mat::Identity(2, 2), std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("mat_exp semigroup property") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> tdist(-1.0, 1.0);
    for (int n : {2, 4}) {
        for (int rep = 0; rep < 20; ++rep) {
            Mat A = random_matrix(n, rng, 0.8);
            const double s = tdist(rng), t = tdist(rng);
            Mat lhs = mat_exp(A, s) * mat_exp(A, t);
            Mat rhs = mat_exp(A, s + t);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() <
                  1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff()) + 1e-12);
        }
    }
}

TEST_CASE("op_norm") {
    CHECK(op_norm(Mat::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-10));
    Mat D = Mat::Zero(2, 2);
    D(0, 0) = 2.0;
    D(1, 1) = 3.0;
    CHECK(op_norm(D) == doctest::Approx(3.0).epsilon(1e-10));
    Mat N(2, 2);
    N << 0, 1, 0, 0;
    CHECK(op_norm(N) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("op_norm submultiplicativity on random pairs") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        Mat A = random_matrix(3, rng, 2.0);
        Mat B = random_matrix(3, rng, 2.0);
        CHECK(op_norm(A * B) <= op_norm(A) * op_norm(B) + 1e-10);
    }
}

TEST_CASE("exp_poly_integral closed forms") {
    // zero kernel: plain polynomial integral
    VecPoly p;
    p.dim = 2;
    p.center = 0.0;
    p.coeffs = {Vec::Ones(2)};
    Vec r = exp_poly_integral(Mat::Zero(2, 2), 0.0, 2.0, p);
    CHECK(r(0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r(1) == doctest::Approx(2.0).epsilon(1e-13));

    // harmonic kernel against the constant (0,1)
    VecPoly q;
    q.dim = 2;
    q.coeffs = {Vec::Zero(2)};
    q.coeffs[0](1) = 1.0;
    for (double x : {0.3, 1.0, std::numbers::pi}) {
        Vec v = exp_poly_integral(rot_generator(), 0.0, x, q);
        CHECK(v(0) == doctest::Approx(1.0 - std::cos(x)).epsilon(1e-12));
        CHECK(v(1) == doctest::Approx(std::sin(x)).epsilon(1e-12));
    }

    // scalar analytic: int_0^1 e^{1-s} ds = e - 1
    VecPoly one;
    one.dim = 1;
    one.coeffs = {Vec::Ones(1)};
    Mat A1(1, 1);
    A1 << 1.0;
    CHECK(exp_poly_integral(A1, 0.0, 1.0, one)(0) ==
          doctest::Approx(std::numbers::e - 1.0).epsilon(1e-13));
}

TEST_CASE("exp_poly_integral dimension mismatch") {
    VecPoly p;
    p.dim = 3;
    p.coeffs = {Vec::Ones(3)};
    CHECK_THROWS_AS(exp_poly_integral(Mat::Zero(2, 2), 0.0, 1.0, p), std::invalid_argument);
}

TEST_CASE("exp_poly_integral agrees with Gauss-Legendre oracle") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const QuadRule rule = gauss_legendre(64);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 2 + (rep % 3);
        Mat A = random_matrix(n, rng, 1.5);
        VecPoly p;
        p.dim = n;
        p.center = dist(rng);
        p.scale = 1.0;
        const int deg = rep % 4;
        for (int j = 0; j <= deg; ++j) {
            Vec c(n);
            for (int i = 0; i < n; ++i) c(i) = dist(rng);
            p.coeffs.push_back(c);
        }
        const double x0 = dist(rng);
        const double x = x0 + std::abs(dist(rng));  // |x-x0| <= 1
        Vec closed = exp_poly_integral(A, x0, x, p);
        Vec quad = gauss_legendre_integrate(
            [&](double s) -> Vec { return mat_exp(A, x - s) * p.eval(s); }, x0, x, rule);
        const double scale = std::max(1.0, quad.cwiseAbs().maxCoeff());
        CHECK((closed - quad).cwiseAbs().maxCoeff() / scale < 1e-11);
    }
}
