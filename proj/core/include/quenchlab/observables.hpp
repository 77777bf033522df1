#pragma once

// Fidelity susceptibility (chi_F) and rescaled irreversible work (RIW,
// <W_irr>/delta^2) of the transverse-field Ising chain: exact even-sector mode
// sums, their continuum-limit integrals, the elliptic closed form for the RIW,
// and the large-N asymptotic laws.

#include <string>
#include <vector>

#include "quenchlab/ising.hpp"

namespace quenchlab {

enum class Observable { chi_f, riw, energy };
enum class Method { mode_sum, continuum_integral, elliptic_closed_form, asymptotic };

std::string to_string(Observable kind);
std::string to_string(Method method);
Observable observable_from_string(const std::string& name);
Method method_from_string(const std::string& name);

/// chi_F = (1/4) sum_{k>0} sin^2 k / (1 + lambda^2 - 2 lambda cos k)^2
/// over the N/2 positive even-sector momenta. Finite for every finite N,
/// lambda = 1 included (the grid excludes k = 0).
double chi_f_sum(const ChainParams& params);

/// Continuum limit of chi_f_sum: (N/8pi) * R_F(lambda, N) with
/// R_F = int_{pi/N}^{pi(N-1)/N} sin^2 k / (1 + lambda^2 - 2 lambda cos k)^2 dk.
/// The prefactor is fixed by requiring agreement with the mode sum (and with
/// the lambda=0 value N/16); see the note in the implementation.
double chi_f_integral(const ChainParams& params);

/// Large-N per-site law: 1/(16(1-lambda^2)) below the critical point,
/// 1/(16 lambda^2 (lambda^2 - 1)) above. Diverges at lambda = 1.
double chi_f_asymptotic(double lambda);

/// RIW = 4 sum_{k in K} sin^2 k / eps_k^3 over all N even-sector momenta.
/// Equals -(1/2) d^2 E0 / d lambda^2. N/4 at lambda = 0.
double riw_sum(const ChainParams& params);

/// Continuum limit (N/2pi) * R(lambda, N) with
/// R = int_{pi/N}^{pi(N-1)/N} sin^2 k / (1 + lambda^2 - 2 lambda cos k)^{3/2} dk.
double riw_integral(const ChainParams& params);

/// Closed form via complete elliptic integrals, m = 4 lambda/(1+lambda)^2:
///   |(N/pi) [(1+lambda^2) K(m) - (1+lambda)^2 E(m)] / (2 lambda^2 (1+lambda))|.
/// The magnitude is returned: the RIW is a sum of squared matrix elements over
/// positive gaps and hence positive, while this expression is often quoted
/// with an overall sign that makes it negative. Returns the lambda->0 limit
/// N/4 at lambda = 0; throws DomainError at lambda = 1 where K diverges.
double riw_elliptic(const ChainParams& params);

/// Uniform dispatcher used by curve sweeps. Method::asymptotic returns the
/// per-site law scaled by N so every method reports the extensive value.
double evaluate(Observable kind, Method method, const ChainParams& params);

struct ObservablePoint {
    ChainParams params;
    Observable kind;
    Method method;
    double value;
};

/// A sampled curve lambda -> value at fixed N; lambdas strictly increasing.
struct ObservableCurve {
    int n_sites = 0;
    Observable kind = Observable::chi_f;
    Method method = Method::mode_sum;
    std::vector<double> lambdas;
    std::vector<double> values;
};

/// Evaluate one observable on a lambda grid (strictly increasing).
ObservableCurve sample_curve(Observable kind, Method method, int n_sites,
                             const std::vector<double>& lambdas);

struct CriticalPeaks {
    int n_sites;
    double chi_f_peak;
    double riw_peak;
};

/// Peak heights of both observables at their pseudo-critical points,
/// located from the mode sums on the default bracket (0.5, 1 + 10/N).
std::vector<CriticalPeaks> critical_peak_values(const std::vector<int>& n_list);

}  // namespace quenchlab
