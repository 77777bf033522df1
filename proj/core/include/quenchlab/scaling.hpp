#pragma once

// Finite-size scaling machinery: pseudo-critical peak location lambda_m(N),
// data collapse under the algebraic and logarithmic Ansaetze, and the
// power/N-log-N fits of the peak heights.

#include <utility>
#include <vector>

#include "quenchlab/observables.hpp"

namespace quenchlab {

struct PeakResult {
    int n_sites = 0;
    double lambda_m = 0.0;    // peak location
    double peak_value = 0.0;  // observable value at lambda_m (mode sum)
};

/// Locate the maximum of the mode-sum observable inside the bracket: a coarse
/// 401-point scan (which doubles as the unimodality check) followed by
/// golden-section refinement to |d lambda| <= 1e-8. Throws BracketError when
/// the scan finds no interior maximum.
PeakResult find_peak(Observable kind, int n_sites, std::pair<double, double> bracket);

/// Default bracket (0.5, 1 + 10/N): peaks sit below the critical point and
/// approach it from below.
std::pair<double, double> default_peak_bracket(int n_sites);

struct CollapsePoint {
    double x;  // N^{1/nu} (lambda - lambda_m)
    double y;  // transformed observable
    int n_sites;
};

struct CollapseResult {
    double nu = 1.0;
    std::vector<CollapsePoint> points;  // every sample of every input curve
    double quality = 0.0;               // normalized residual, lower is better
    double window = 2.0;                // |x| window the quality was scored on
};

struct CollapseOptions {
    double window = 2.0;
};

/// Algebraic Ansatz for the fidelity susceptibility:
///   y = [v(lambda) - v(lambda_m)] / v(lambda_m),  x = N^{1/nu}(lambda - lambda_m).
/// The y transform is scale-invariant, so raw chi_F values can be fed directly.
CollapseResult collapse_algebraic(const std::vector<ObservableCurve>& curves,
                                  const std::vector<PeakResult>& peaks, double nu,
                                  const CollapseOptions& opt = {});

/// Logarithmic Ansatz for the RIW:
///   y = 1 - exp[R(lambda) - R(lambda_m)] with R = 2 pi * value / N.
/// y vanishes at the peak of every curve by construction.
CollapseResult collapse_logarithmic(const std::vector<ObservableCurve>& curves,
                                    const std::vector<PeakResult>& peaks, double nu,
                                    const CollapseOptions& opt = {});

enum class ScalingLaw {
    power,    // fit log(peak) vs log(N); slope is the critical adiabatic dimension
    n_log_n,  // fit peak/N vs ln(N)
};

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least-squares fit of the peak heights against the requested law.
/// Requires at least 4 peaks spanning a factor >= 8 in N.
ScalingFit fit_peak_scaling(const std::vector<PeakResult>& peaks, ScalingLaw law);

/// Collapse quality over a grid of nu values (ascending); used to probe the
/// sensitivity of the collapse to the correlation-length exponent.
std::vector<std::pair<double, double>> scan_collapse_nu(
    const std::vector<ObservableCurve>& curves, const std::vector<PeakResult>& peaks,
    bool logarithmic, const std::vector<double>& nu_grid, const CollapseOptions& opt = {});

}  // namespace quenchlab
