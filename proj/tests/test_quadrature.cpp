#include "quenchlab/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "quenchlab/errors.hpp"

using namespace quenchlab;

TEST_CASE("polynomials are integrated exactly by the 15-point rule") {
    double v = integrate([](double x) { return 3.0 * x * x; }, 0.0, 2.0);
    CHECK(v == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(integrate([](double) { return 1.0; }, -1.0, 3.0) == doctest::Approx(4.0));
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("oscillatory and smooth integrands hit the absolute tolerance") {
    double v = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(std::fabs(v - 2.0) < 1e-12);
    double w = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(std::fabs(w - std::sqrt(std::numbers::pi)) < 1e-10);
}

TEST_CASE("near-singular lower endpoint converges by bisection toward it") {
    // int_a^1 1/sqrt(x) dx = 2(1 - sqrt(a)); steep at the lower end.
    double a = 1e-10;
    double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, a, 1.0);
    CHECK(std::fabs(v - 2.0 * (1.0 - std::sqrt(a))) < 1e-9);

    // 1/x over [pi/N, pi(N-1)/N] for N = 4096: the regularized critical shape.
    double n = 4096;
    double lo = std::numbers::pi / n, hi = std::numbers::pi * (n - 1) / n;
    double logint = integrate([](double x) { return 1.0 / x; }, lo, hi);
    CHECK(std::fabs(logint - std::log(hi / lo)) < 1e-10);
}

TEST_CASE("subdivision cap raises a numerical error") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-30;  // unattainable
    opt.max_subdivisions = 20;
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(std::fabs(x) + 1e-14); },
                              1e-12, 1.0, opt),
                    NumericalError);
}
