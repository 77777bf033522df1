#include "quenchlab/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quenchlab/errors.hpp"

namespace quenchlab {

namespace {

constexpr int kCoarsePoints = 401;
constexpr double kGoldenTol = 1e-8;

template <class F>
PeakResult refine_peak(F&& f, int n_sites, double lo, double hi) {
    // Coarse scan; the interior-argmax requirement is the unimodality check.
    std::vector<double> xs(kCoarsePoints), ys(kCoarsePoints);
    for (int i = 0; i < kCoarsePoints; ++i) {
        xs[i] = lo + (hi - lo) * i / (kCoarsePoints - 1);
        ys[i] = f(xs[i]);
    }
    int imax = 0;
    for (int i = 1; i < kCoarsePoints; ++i)
        if (ys[i] > ys[imax]) imax = i;
    if (imax == 0 || imax == kCoarsePoints - 1) {
        throw BracketError("find_peak: no interior maximum in bracket ("
                           + std::to_string(lo) + ", " + std::to_string(hi)
                           + ") for N=" + std::to_string(n_sites));
    }

    // Golden-section refinement on the bracketing triple.
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = xs[imax - 1], b = xs[imax + 1];
    while (b - a > kGoldenTol) {
        double c = b - gr * (b - a);
        double d = a + gr * (b - a);
        if (f(c) >= f(d))
            b = d;
        else
            a = c;
    }
    double lambda_m = 0.5 * (a + b);
    return {n_sites, lambda_m, f(lambda_m)};
}

double interpolate_master(const std::vector<double>& node_x,
                          const std::vector<double>& node_y, double x) {
    // Piecewise-linear through the nodes, clamped beyond the end nodes.
    if (x <= node_x.front()) return node_y.front();
    if (x >= node_x.back()) return node_y.back();
    auto it = std::upper_bound(node_x.begin(), node_x.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - node_x.begin());
    std::size_t lo = hi - 1;
    double span = node_x[hi] - node_x[lo];
    if (span <= 0.0) return 0.5 * (node_y[lo] + node_y[hi]);
    double t = (x - node_x[lo]) / span;
    return (1.0 - t) * node_y[lo] + t * node_y[hi];
}

// Mean squared deviation from the pooled master curve, normalized by the
// variance of y inside the window. The normalization keeps the score
// comparable across nu values: a wrong exponent concentrates the windowed
// points near y ~ 0 where an un-normalized deviation would look spuriously
// small.
double collapse_quality(std::vector<CollapsePoint> pts, double window,
                        std::size_t n_curves) {
    if (n_curves <= 1) return 0.0;  // a single curve collapses onto itself
    std::erase_if(pts, [window](const CollapsePoint& p) { return std::fabs(p.x) > window; });
    if (pts.size() < 2) return 0.0;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const CollapsePoint& a, const CollapsePoint& b) { return a.x < b.x; });

    // Local averaging over chunks of 10 x-sorted points defines the master nodes.
    std::vector<double> node_x, node_y;
    for (std::size_t i = 0; i < pts.size(); i += 10) {
        std::size_t end = std::min(i + 10, pts.size());
        double sx = 0.0, sy = 0.0;
        for (std::size_t j = i; j < end; ++j) {
            sx += pts[j].x;
            sy += pts[j].y;
        }
        node_x.push_back(sx / (end - i));
        node_y.push_back(sy / (end - i));
    }

    double mse = 0.0, mean = 0.0;
    for (const CollapsePoint& p : pts) mean += p.y;
    mean /= pts.size();
    double var = 0.0;
    for (const CollapsePoint& p : pts) {
        double d = p.y - interpolate_master(node_x, node_y, p.x);
        mse += d * d;
        var += (p.y - mean) * (p.y - mean);
    }
    mse /= pts.size();
    var /= pts.size();
    if (var <= 0.0) return 0.0;
    return mse / var;
}

void check_collapse_inputs(const std::vector<ObservableCurve>& curves,
                           const std::vector<PeakResult>& peaks, double nu) {
    if (curves.empty()) throw InputError("collapse: no curves given");
    if (curves.size() != peaks.size()) {
        throw InputError("collapse: got " + std::to_string(curves.size()) + " curves but "
                         + std::to_string(peaks.size()) + " peaks");
    }
    if (!(nu > 0.0)) throw InputError("collapse: nu must be positive");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].n_sites != peaks[i].n_sites) {
            throw InputError("collapse: curve/peak N mismatch at index " + std::to_string(i));
        }
    }
}

}  // namespace

PeakResult find_peak(Observable kind, int n_sites, std::pair<double, double> bracket) {
    ChainParams probe{n_sites, std::max(bracket.first, 0.0)};
    probe.validate();
    if (!(bracket.first < bracket.second)) {
        throw BracketError("find_peak: empty bracket");
    }
    auto f = [kind, n_sites](double lambda) {
        return evaluate(kind, Method::mode_sum, {n_sites, lambda});
    };
    return refine_peak(f, n_sites, bracket.first, bracket.second);
}

std::pair<double, double> default_peak_bracket(int n_sites) {
    return {0.5, 1.0 + 10.0 / n_sites};
}

CollapseResult collapse_algebraic(const std::vector<ObservableCurve>& curves,
                                  const std::vector<PeakResult>& peaks, double nu,
                                  const CollapseOptions& opt) {
    check_collapse_inputs(curves, peaks, nu);
    CollapseResult result;
    result.nu = nu;
    result.window = opt.window;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const ObservableCurve& curve = curves[c];
        const PeakResult& peak = peaks[c];
        double scale = std::pow(static_cast<double>(curve.n_sites), 1.0 / nu);
        for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
            double x = scale * (curve.lambdas[i] - peak.lambda_m);
            double y = (curve.values[i] - peak.peak_value) / peak.peak_value;
            result.points.push_back({x, y, curve.n_sites});
        }
    }
    result.quality = collapse_quality(result.points, opt.window, curves.size());
    return result;
}

CollapseResult collapse_logarithmic(const std::vector<ObservableCurve>& curves,
                                    const std::vector<PeakResult>& peaks, double nu,
                                    const CollapseOptions& opt) {
    check_collapse_inputs(curves, peaks, nu);
    CollapseResult result;
    result.nu = nu;
    result.window = opt.window;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const ObservableCurve& curve = curves[c];
        const PeakResult& peak = peaks[c];
        double scale = std::pow(static_cast<double>(curve.n_sites), 1.0 / nu);
        double r_peak = 2.0 * std::numbers::pi * peak.peak_value / curve.n_sites;
        for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
            double x = scale * (curve.lambdas[i] - peak.lambda_m);
            double r = 2.0 * std::numbers::pi * curve.values[i] / curve.n_sites;
            double y = 1.0 - std::exp(r - r_peak);
            result.points.push_back({x, y, curve.n_sites});
        }
    }
    result.quality = collapse_quality(result.points, opt.window, curves.size());
    return result;
}

ScalingFit fit_peak_scaling(const std::vector<PeakResult>& peaks, ScalingLaw law) {
    if (peaks.size() < 4) {
        throw InputError("fit_peak_scaling: need at least 4 peaks, got "
                         + std::to_string(peaks.size()));
    }
    int n_min = peaks.front().n_sites, n_max = peaks.front().n_sites;
    for (const PeakResult& p : peaks) {
        n_min = std::min(n_min, p.n_sites);
        n_max = std::max(n_max, p.n_sites);
    }
    if (n_max < 8 * n_min) {
        throw InputError("fit_peak_scaling: peaks must span a factor >= 8 in N");
    }

    std::vector<double> xs, ys;
    xs.reserve(peaks.size());
    ys.reserve(peaks.size());
    for (const PeakResult& p : peaks) {
        xs.push_back(std::log(static_cast<double>(p.n_sites)));
        ys.push_back(law == ScalingLaw::power ? std::log(p.peak_value)
                                              : p.peak_value / p.n_sites);
    }

    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    double mx = sx / xs.size(), my = sy / ys.size();
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    ScalingFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

std::vector<std::pair<double, double>> scan_collapse_nu(
    const std::vector<ObservableCurve>& curves, const std::vector<PeakResult>& peaks,
    bool logarithmic, const std::vector<double>& nu_grid, const CollapseOptions& opt) {
    std::vector<std::pair<double, double>> out;
    out.reserve(nu_grid.size());
    for (double nu : nu_grid) {
        CollapseResult r = logarithmic ? collapse_logarithmic(curves, peaks, nu, opt)
                                       : collapse_algebraic(curves, peaks, nu, opt);
        out.emplace_back(nu, r.quality);
    }
    return out;
}

}  // namespace quenchlab
