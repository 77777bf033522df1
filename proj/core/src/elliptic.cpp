#include "quenchlab/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quenchlab/errors.hpp"

namespace quenchlab {

namespace {
constexpr int kMaxIterations = 60;
constexpr double kAgmTolerance = 1e-15;
}  // namespace

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("agm: both arguments must be positive (a=" + std::to_string(a)
                          + ", b=" + std::to_string(b) + ")");
    }
    for (int i = 0; i < kMaxIterations; ++i) {
        if (std::fabs(a - b) <= kAgmTolerance * a) return 0.5 * (a + b);
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    throw NumericalError("agm: no convergence after 60 iterations");
}

double elliptic_k(double m) {
    if (m < 0.0 || m >= 1.0) {
        throw DomainError("elliptic_k: m must lie in [0,1), got " + std::to_string(m));
    }
    return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

double elliptic_e(double m) {
    if (m < 0.0 || m > 1.0) {
        throw DomainError("elliptic_e: m must lie in [0,1], got " + std::to_string(m));
    }
    if (m == 1.0) return 1.0;
    if (m == 0.0) return std::numbers::pi / 2.0;

    // AGM with the accumulated c_n^2 terms: E = K * (1 - sum_n 2^{n-1} c_n^2),
    // where c_0^2 = m and c_{n+1} = (a_n - b_n)/2.
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    double sum = 0.5 * m;
    double pow2 = 0.5;
    for (int i = 0; i < kMaxIterations; ++i) {
        if (std::fabs(a - b) <= kAgmTolerance * a) {
            double k_value = std::numbers::pi / (a + b);  // pi / (2 * agm)
            return k_value * (1.0 - sum);
        }
        double c = 0.5 * (a - b);
        pow2 *= 2.0;
        sum += pow2 * c * c;
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    throw NumericalError("elliptic_e: AGM did not converge");
}

EllipticEDerivatives elliptic_e_derivatives(double m) {
    if (!(m > 0.0) || !(m < 1.0)) {
        throw DomainError("elliptic_e_derivatives: m must lie in (0,1), got "
                          + std::to_string(m));
    }
    double e = elliptic_e(m);
    double k = elliptic_k(m);
    EllipticEDerivatives d;
    d.first = (e - k) / (2.0 * m);
    d.second = (2.0 * (m - 1.0) * k - (m - 2.0) * e) / (4.0 * (m - 1.0) * m * m);
    return d;
}

}  // namespace quenchlab
