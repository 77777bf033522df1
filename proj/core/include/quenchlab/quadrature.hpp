#pragma once

// Globally adaptive Gauss-Kronrod (G7,K15) quadrature. The worst interval is
// bisected until the summed error estimate meets the absolute tolerance, so
// refinement naturally piles up against singular endpoints.

#include <cmath>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "quenchlab/errors.hpp"

namespace quenchlab {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    std::size_t max_subdivisions = 1000000;
};

namespace detail {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights
// (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkEstimate {
    double integral;
    double error;
};

template <class F>
GkEstimate gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fc = f(center);
    double result_gauss = 0.0;
    double result_kronrod = kWgk[7] * fc;
    double resabs = std::fabs(result_kronrod);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        double absc = half * kXgk[j];
        double f1 = f(center - absc);
        double f2 = f(center + absc);
        fv1[j] = f1;
        fv2[j] = f2;
        double fsum = f1 + f2;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
        result_kronrod += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    }
    // QUADPACK error model: rescale |K15 - G7| by the variation of f.
    double mean = 0.5 * result_kronrod;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
    resasc *= std::fabs(half);
    resabs *= std::fabs(half);

    GkEstimate out;
    out.integral = result_kronrod * half;
    double err = std::fabs((result_kronrod - result_gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double uflow = 1e-290;
    if (resabs > uflow / (50.0 * 2.2e-16))
        err = std::max(err, 2.2e-16 * 50.0 * resabs);
    out.error = err;
    return out;
}

struct Interval {
    double a, b, integral, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace detail

/// Integrate f over [a, b] to the requested absolute tolerance.
/// Throws NumericalError if the subdivision cap is hit first.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (a == b) return 0.0;

    std::priority_queue<detail::Interval> queue;
    auto first = detail::gk15(f, a, b);
    queue.push({a, b, first.integral, first.error});
    double total = first.integral;
    double total_error = first.error;
    std::size_t splits = 0;

    while (total_error > opt.abs_tol) {
        if (splits >= opt.max_subdivisions) {
            throw NumericalError(
                "integrate: no convergence after " + std::to_string(splits)
                + " subdivisions (error estimate " + std::to_string(total_error)
                + ", abs_tol " + std::to_string(opt.abs_tol) + ")");
        }
        detail::Interval worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            // Interval has collapsed to machine resolution; accept its estimate.
            total_error -= worst.error;
            if (queue.empty()) break;
            continue;
        }
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_error += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.integral, left.error});
        queue.push({mid, worst.b, right.integral, right.error});
        ++splits;
    }
    return total;
}

}  // namespace quenchlab
