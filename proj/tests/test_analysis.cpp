#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "picard/analysis.hpp"
#include "picard/rootfind.hpp"

using namespace picard;

namespace {

PiecewiseCurve constant_curve(double a, double b, double v0, double v1) {
    PiecewiseCurve c;
    c.nodes = {a, b};
    CurveSegment seg;
    seg.x0 = a;
    seg.x1 = b;
    seg.basis = SegmentBasis::monomial;
    Vec v(2);
    v << v0, v1;
    seg.coeffs = {v};
    c.segments.push_back(seg);
    return c;
}

}  // namespace

TEST_CASE("l2_mean_error basics") {
    const PiecewiseCurve a = constant_curve(0.0, 2.0, 1.0, 5.0);
    const PiecewiseCurve b = constant_curve(0.0, 2.0, 1.0, -5.0);
    CHECK(l2_mean_error(a, a, 0.0, 2.0) == 0.0);
    // identical first components, different second: component selection matters
    CHECK(l2_mean_error(a, b, 0.0, 2.0, 0) == doctest::Approx(0.0));
    CHECK(l2_mean_error(a, b, 0.0, 2.0, 1) == doctest::Approx(100.0).epsilon(1e-12));

    // constant offset d: mean-square error is d^2, plain integral is d^2 (b-a)
    const PiecewiseCurve c = constant_curve(0.0, 2.0, 1.3, 0.0);
    CHECK(l2_mean_error(a, c, 0.0, 2.0, 0) == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(l2_mean_error(a, c, 0.0, 2.0, 0, false) == doctest::Approx(0.18).epsilon(1e-12));
}

TEST_CASE("l2_mean_error integrates a polynomial difference exactly") {
    // ref = 0, cand = x on [0,1]: mean integral of x^2 is 1/3
    PiecewiseCurve zero = constant_curve(0.0, 1.0, 0.0, 0.0);
    PiecewiseCurve ramp;
    ramp.nodes = {0.0, 1.0};
    CurveSegment seg;
    seg.x0 = 0.0;
    seg.x1 = 1.0;
    seg.basis = SegmentBasis::monomial;
    Vec c0 = Vec::Zero(2), c1 = Vec::Zero(2);
    c1(0) = 1.0;
    seg.coeffs = {c0, c1};
    ramp.segments.push_back(seg);
    CHECK(l2_mean_error(zero, ramp, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("l2_mean_error demands coverage of the requested interval") {
    const PiecewiseCurve shorter = constant_curve(0.0, 1.0, 0.0, 0.0);
    const PiecewiseCurve longer = constant_curve(0.0, 2.0, 0.0, 0.0);
    CHECK_THROWS_AS(l2_mean_error(shorter, longer, 0.0, 2.0), std::invalid_argument);
}

TEST_CASE("root finding utilities") {
    auto f = [](double x) { return x * x - 2.0; };
    CHECK(find_root_bracketed(f, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(find_root_secant(f, 1.0, 1.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(find_root_bracketed(f, 2.0, 3.0), root_not_found_error);
    CHECK_THROWS_AS(find_root_secant([](double) { return 1.0; }, 0.0, 1.0),
                    root_not_found_error);
}

TEST_CASE("error table lookup") {
    ErrorTable table;
    table.rows.push_back({"ep", 0.1, 3, 1, 1e-9});
    table.rows.push_back({"ep", 0.1, 3, 3, 1e-12});
    const ErrorTableRow* row = table.find("ep", 0.1, 3, 3);
    REQUIRE(row != nullptr);
    CHECK(row->error == doctest::Approx(1e-12));
    CHECK(table.find("sp", 0.1, 3, 3) == nullptr);
    CHECK(table.find("ep", 0.5, 3, 3) == nullptr);
}

TEST_CASE("reproduce_table rejects unknown ids") {
    CHECK_THROWS_AS(reproduce_table("T14"), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_table("zzz"), std::invalid_argument);
}

TEST_CASE("reproduce_table is deterministic (bit-identical reruns)") {
    TableOverrides ov;
    ov.ref_step = 0.01;  // keep the reference cheap for a unit test
    const ErrorTable t1 = reproduce_table("T2", ov);
    const ErrorTable t2 = reproduce_table("T2", ov);
    REQUIRE(t1.rows.size() == t2.rows.size());
    CHECK(t1.rows.size() == 16);  // 2 widths x 2 degrees x 4 iteration counts
    for (std::size_t i = 0; i < t1.rows.size(); ++i) {
        CHECK(t1.rows[i].method == t2.rows[i].method);
        CHECK(t1.rows[i].error == t2.rows[i].error);  // exact equality intended
    }
    CHECK(t1.problem == "mathieu");
    CHECK(t1.reference == "rk8");
}

TEST_CASE("taylor table rows carry the order in the iterations column") {
    TableOverrides ov;
    ov.ref_step = 0.01;
    const ErrorTable t = reproduce_table("T1", ov);
    CHECK(t.rows.size() == 8);  // 2 widths x orders 2..5
    for (const auto& r : t.rows) {
        CHECK(r.method == "taylor");
        CHECK(r.iterations >= 2);
        CHECK(r.iterations <= 5);
        CHECK(r.error >= 0.0);
    }
    // accuracy improves with the order at fixed h
    const ErrorTableRow* lo = t.find("taylor", 0.1, 2, 0);
    const ErrorTableRow* hi = t.find("taylor", 0.1, 5, 0);
    REQUIRE(lo != nullptr);
    REQUIRE(hi != nullptr);
    CHECK(hi->error < lo->error);
}
