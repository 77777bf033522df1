#include "quenchlab/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quenchlab/elliptic.hpp"
#include "quenchlab/errors.hpp"
#include "quenchlab/quadrature.hpp"
#include "quenchlab/scaling.hpp"

namespace quenchlab {

std::string to_string(Observable kind) {
    switch (kind) {
        case Observable::chi_f: return "chi-f";
        case Observable::riw: return "riw";
        case Observable::energy: return "energy";
    }
    return "?";
}

std::string to_string(Method method) {
    switch (method) {
        case Method::mode_sum: return "sum";
        case Method::continuum_integral: return "integral";
        case Method::elliptic_closed_form: return "elliptic";
        case Method::asymptotic: return "asymptotic";
    }
    return "?";
}

Observable observable_from_string(const std::string& name) {
    if (name == "chi-f") return Observable::chi_f;
    if (name == "riw") return Observable::riw;
    if (name == "energy") return Observable::energy;
    throw ConfigError("unknown observable '" + name + "' (expected chi-f, riw or energy)");
}

Method method_from_string(const std::string& name) {
    if (name == "sum") return Method::mode_sum;
    if (name == "integral") return Method::continuum_integral;
    if (name == "elliptic") return Method::elliptic_closed_form;
    if (name == "asymptotic") return Method::asymptotic;
    throw ConfigError("unknown method '" + name + "' (expected sum, integral or elliptic)");
}

double chi_f_sum(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    double acc = 0.0;
    for (int n = 1; n <= params.n_sites / 2; ++n) {
        double k = std::numbers::pi * (2 * n - 1) / params.n_sites;
        double s = std::sin(k);
        double g = 1.0 + lambda * lambda - 2.0 * lambda * std::cos(k);
        acc += s * s / (g * g);
    }
    return 0.25 * acc;
}

double chi_f_integral(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    const double lo = std::numbers::pi / params.n_sites;
    const double hi = std::numbers::pi * (params.n_sites - 1) / params.n_sites;
    double rf = integrate(
        [lambda](double k) {
            double s = std::sin(k);
            double g = 1.0 + lambda * lambda - 2.0 * lambda * std::cos(k);
            return s * s / (g * g);
        },
        lo, hi);
    // The positive-momentum sum has spacing 2pi/N, so sum ~= (N/2pi) * R_F and
    // chi_F ~= (N/8pi) * R_F. (A prefactor N/4pi would double the lambda=0
    // value N/16 and disagree with the mode sum everywhere.)
    return params.n_sites / (8.0 * std::numbers::pi) * rf;
}

double chi_f_asymptotic(double lambda) {
    if (lambda < 0.0) throw DomainError("chi_f_asymptotic: lambda must be >= 0");
    if (lambda == 1.0) {
        throw DomainError("chi_f_asymptotic: diverges at the critical point lambda = 1");
    }
    if (lambda < 1.0) return 1.0 / (16.0 * (1.0 - lambda * lambda));
    return 1.0 / (16.0 * lambda * lambda * (lambda * lambda - 1.0));
}

double riw_sum(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    double acc = 0.0;
    for (int n = 1; n <= params.n_sites / 2; ++n) {
        double k = std::numbers::pi * (2 * n - 1) / params.n_sites;
        double s = std::sin(k);
        double eps = quasiparticle_energy(lambda, k);
        acc += 2.0 * s * s / (eps * eps * eps);  // k and -k contribute equally
    }
    return 4.0 * acc;
}

double riw_integral(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    const double lo = std::numbers::pi / params.n_sites;
    const double hi = std::numbers::pi * (params.n_sites - 1) / params.n_sites;
    double r = integrate(
        [lambda](double k) {
            double s = std::sin(k);
            double g = 1.0 + lambda * lambda - 2.0 * lambda * std::cos(k);
            return s * s / (g * std::sqrt(g));
        },
        lo, hi);
    return params.n_sites / (2.0 * std::numbers::pi) * r;
}

double riw_elliptic(const ChainParams& params) {
    params.validate();
    const double lambda = params.field;
    if (lambda == 0.0) return params.n_sites / 4.0;
    if (lambda == 1.0) {
        throw DomainError("riw_elliptic: K(m) diverges at the critical point lambda = 1");
    }
    const double one_plus = 1.0 + lambda;
    // m < 1 holds algebraically for lambda != 1 but can round up to 1.
    const double m = std::min(std::nextafter(1.0, 0.0), 4.0 * lambda / (one_plus * one_plus));
    const double k_val = elliptic_k(m);
    const double e_val = elliptic_e(m);
    double value = -(params.n_sites / std::numbers::pi)
                   * ((1.0 + lambda * lambda) * k_val - one_plus * one_plus * e_val)
                   / (2.0 * lambda * lambda * one_plus);
    return std::fabs(value);
}

double evaluate(Observable kind, Method method, const ChainParams& params) {
    switch (kind) {
        case Observable::chi_f:
            switch (method) {
                case Method::mode_sum: return chi_f_sum(params);
                case Method::continuum_integral: return chi_f_integral(params);
                case Method::asymptotic:
                    return params.n_sites * chi_f_asymptotic(params.field);
                case Method::elliptic_closed_form:
                    throw ConfigError("chi-f has no elliptic closed form");
            }
            break;
        case Observable::riw:
            switch (method) {
                case Method::mode_sum: return riw_sum(params);
                case Method::continuum_integral: return riw_integral(params);
                case Method::elliptic_closed_form: return riw_elliptic(params);
                case Method::asymptotic:
                    throw ConfigError("riw has no closed asymptotic law away from lambda=1");
            }
            break;
        case Observable::energy:
            switch (method) {
                case Method::mode_sum: return ground_energy_sum(params);
                case Method::continuum_integral: return ground_energy_integral(params);
                case Method::elliptic_closed_form: return ground_energy_elliptic(params);
                case Method::asymptotic:
                    throw ConfigError("energy has no asymptotic method");
            }
            break;
    }
    throw ConfigError("unsupported observable/method combination");
}

ObservableCurve sample_curve(Observable kind, Method method, int n_sites,
                             const std::vector<double>& lambdas) {
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > lambdas[i - 1])) {
            throw InputError("sample_curve: lambda grid must be strictly increasing");
        }
    }
    ObservableCurve curve;
    curve.n_sites = n_sites;
    curve.kind = kind;
    curve.method = method;
    curve.lambdas = lambdas;
    curve.values.reserve(lambdas.size());
    for (double lambda : lambdas) {
        curve.values.push_back(evaluate(kind, method, {n_sites, lambda}));
    }
    return curve;
}

std::vector<CriticalPeaks> critical_peak_values(const std::vector<int>& n_list) {
    std::vector<CriticalPeaks> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        if (n < 8 || n % 2 != 0) {
            throw ConfigError("critical_peak_values: N must be even and >= 8, got "
                              + std::to_string(n));
        }
        std::pair<double, double> bracket{0.5, 1.0 + 10.0 / n};
        PeakResult chi = find_peak(Observable::chi_f, n, bracket);
        PeakResult riw = find_peak(Observable::riw, n, bracket);
        out.push_back({n, chi.peak_value, riw.peak_value});
    }
    return out;
}

}  // namespace quenchlab
