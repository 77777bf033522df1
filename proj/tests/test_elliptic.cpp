#include "quenchlab/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "quenchlab/errors.hpp"
#include "quenchlab/quadrature.hpp"

using namespace quenchlab;

namespace {

// Independent oracle: adaptive quadrature of the defining integrals.
double k_by_quadrature(double m) {
    return integrate(
        [m](double t) {
            double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 - m * s * s);
        },
        0.0, std::numbers::pi / 2, {1e-13, 1000000});
}

double e_by_quadrature(double m) {
    return integrate(
        [m](double t) {
            double s = std::sin(t);
            return std::sqrt(1.0 - m * s * s);
        },
        0.0, std::numbers::pi / 2, {1e-13, 1000000});
}

}  // namespace

TEST_CASE("agm fixed points and domain") {
    CHECK(agm(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(agm(2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(agm(1.0, -2.0), DomainError);
}

TEST_CASE("agm reproduces K at m = 1/2") {
    // Frozen from 30-digit arithmetic: agm(1, 1/sqrt(2)).
    double a = agm(1.0, 1.0 / std::sqrt(2.0));
    CHECK(a == doctest::Approx(0.847213084793979087).epsilon(1e-14));
    // pi/(2 agm(1, sqrt(1-m))) must equal the defining integral of K.
    double k_quad = k_by_quadrature(0.5);
    CHECK(std::numbers::pi / (2.0 * a) == doctest::Approx(k_quad).epsilon(1e-12));
}

TEST_CASE("elliptic_k endpoints and reference values") {
    CHECK(elliptic_k(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    // Frozen from 30-digit arithmetic.
    CHECK(elliptic_k(0.5) == doctest::Approx(1.8540746773013719).epsilon(1e-13));
    CHECK_THROWS_AS(elliptic_k(1.0), DomainError);
    CHECK_THROWS_AS(elliptic_k(-0.1), DomainError);
}

TEST_CASE("elliptic_k near m = 1 follows the logarithmic asymptote") {
    double m = 1.0 - 1e-8;
    double asymptote = -std::log(1.0 - m) / 2.0 + 2.0 * std::log(2.0);
    double rel = std::fabs(elliptic_k(m) - asymptote) / elliptic_k(m);
    CHECK(rel < 0.01);
}

TEST_CASE("elliptic_e endpoints and reference values") {
    CHECK(elliptic_e(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(elliptic_e(1.0) == 1.0);  // exact by the endpoint policy
    CHECK(elliptic_e(0.5) == doctest::Approx(1.3506438810476755).epsilon(1e-13));
    CHECK_THROWS_AS(elliptic_e(1.0000001), DomainError);
    CHECK_THROWS_AS(elliptic_e(-0.5), DomainError);
}

TEST_CASE("K and E match quadrature of their defining integrals") {
    for (int i = 0; i <= 49; ++i) {
        double m = 0.98 * i / 49.0;  // 50-point grid
        CHECK(std::fabs(elliptic_k(m) - k_by_quadrature(m)) < 1e-10);
        CHECK(std::fabs(elliptic_e(m) - e_by_quadrature(m)) < 1e-10);
    }
}

TEST_CASE("Legendre relation") {
    for (int i = 1; i <= 9; ++i) {
        double m = i / 10.0;
        double lhs = elliptic_e(m) * elliptic_k(1.0 - m) + elliptic_e(1.0 - m) * elliptic_k(m)
                     - elliptic_k(m) * elliptic_k(1.0 - m);
        CHECK(std::fabs(lhs - std::numbers::pi / 2) < 1e-10);
    }
}

TEST_CASE("K increasing and E decreasing in m") {
    double prev_k = elliptic_k(0.0);
    double prev_e = elliptic_e(0.0);
    for (int i = 1; i < 100; ++i) {
        double m = 0.99 * i / 99.0;
        double k = elliptic_k(m);
        double e = elliptic_e(m);
        CHECK(k > prev_k);
        CHECK(e < prev_e);
        prev_k = k;
        prev_e = e;
    }
}

TEST_CASE("derivatives of E match the printed formulas and finite differences") {
    // Direct substitution at m = 0.5.
    auto d = elliptic_e_derivatives(0.5);
    CHECK(d.first == doctest::Approx((elliptic_e(0.5) - elliptic_k(0.5)) / 1.0).epsilon(1e-14));

    // Finite-difference oracle at m = 0.3.
    auto d3 = elliptic_e_derivatives(0.3);
    double h = 1e-5;
    double fd1 = (elliptic_e(0.3 + h) - elliptic_e(0.3 - h)) / (2.0 * h);
    double fd2 = (elliptic_e(0.3 + h) - 2.0 * elliptic_e(0.3) + elliptic_e(0.3 - h)) / (h * h);
    CHECK(std::fabs(d3.first - fd1) < 1e-8);
    CHECK(std::fabs(d3.second - fd2) < 1e-6);
    // Frozen from 30-digit arithmetic.
    CHECK(d3.first == doctest::Approx(-0.447543972943543000).epsilon(1e-12));
    CHECK(d3.second == doctest::Approx(-0.228857071631839121).epsilon(1e-12));

    CHECK_THROWS_AS(elliptic_e_derivatives(0.0), DomainError);
    CHECK_THROWS_AS(elliptic_e_derivatives(1.0), DomainError);
}
