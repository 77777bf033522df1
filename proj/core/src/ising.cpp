#include "quenchlab/ising.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quenchlab/elliptic.hpp"
#include "quenchlab/errors.hpp"
#include "quenchlab/quadrature.hpp"

namespace quenchlab {

void ChainParams::validate() const {
    if (n_sites < 2 || n_sites % 2 != 0) {
        throw ConfigError("chain requires an even number of sites >= 2, got "
                          + std::to_string(n_sites));
    }
    if (!(field >= 0.0)) {
        throw ConfigError("transverse field must be >= 0, got " + std::to_string(field));
    }
}

double quasiparticle_energy(double lambda, double k) {
    return 2.0 * std::sqrt(1.0 + lambda * lambda - 2.0 * lambda * std::cos(k));
}

double bogoliubov_angle(double lambda, double k) {
    double eps = quasiparticle_energy(lambda, k);
    if (eps == 0.0) {
        throw SingularityError("bogoliubov_angle: gap closed at lambda="
                               + std::to_string(lambda) + ", k=" + std::to_string(k));
    }
    return std::atan2(2.0 * std::sin(k) / eps, 2.0 * (lambda - std::cos(k)) / eps);
}

MomentumGrid MomentumGrid::build(const ChainParams& params) {
    params.validate();
    MomentumGrid grid;
    grid.n_sites_ = params.n_sites;
    grid.field_ = params.field;
    grid.modes_.reserve(params.n_sites);
    const int half = params.n_sites / 2;
    // Negative momenta in increasing order, then positive ones.
    for (int n = half; n >= 1; --n) {
        double k = -std::numbers::pi * (2 * n - 1) / params.n_sites;
        grid.modes_.push_back({k, quasiparticle_energy(params.field, k),
                               bogoliubov_angle(params.field, k)});
    }
    for (int n = 1; n <= half; ++n) {
        double k = std::numbers::pi * (2 * n - 1) / params.n_sites;
        grid.modes_.push_back({k, quasiparticle_energy(params.field, k),
                               bogoliubov_angle(params.field, k)});
    }
    return grid;
}

double ground_energy_sum(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    double acc = 0.0;
    for (int n = params.n_sites / 2; n >= 1; --n) {
        double k = std::numbers::pi * (2 * n - 1) / params.n_sites;
        // k and -k contribute equally; the grid holds both.
        acc += 2.0 * std::sqrt(1.0 + lambda * lambda - 2.0 * lambda * std::cos(k));
    }
    return -acc;
}

double ground_energy_integral(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    const double lo = std::numbers::pi / params.n_sites;
    const double hi = std::numbers::pi * (params.n_sites - 1) / params.n_sites;
    double r = integrate(
        [lambda](double k) {
            return std::sqrt(1.0 + lambda * lambda - 2.0 * lambda * std::cos(k));
        },
        lo, hi);
    return -(params.n_sites / std::numbers::pi) * r;
}

double ground_energy_elliptic(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    // m = 4 lambda/(1+lambda)^2 <= 1 algebraically; rounding may overshoot by an ulp.
    const double m = std::min(1.0, 4.0 * lambda / ((1.0 + lambda) * (1.0 + lambda)));
    return -(2.0 * params.n_sites / std::numbers::pi) * (1.0 + lambda) * elliptic_e(m);
}

}  // namespace quenchlab
