#include "quenchlab/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "quenchlab/errors.hpp"

namespace quenchlab {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOffDiagTolerance = 1e-12;  // relative to ||A||_F
constexpr double kNegligibleElement = 1e-10;

// <psi_n|H1|psi_0> for every n, as one matrix-vector product with the
// diagonal-weighted ground state.
std::vector<double> h1_matrix_elements(const DenseHamiltonian& h, const EigenSystem& es) {
    std::span<const double> psi0 = es.eigenvector(0);
    std::vector<double> weighted(h.dim);
    for (std::size_t s = 0; s < h.dim; ++s) weighted[s] = h.field_diag[s] * psi0[s];
    std::vector<double> elements(h.dim);
    for (std::size_t n = 0; n < h.dim; ++n) {
        std::span<const double> psi = es.eigenvector(n);
        double acc = 0.0;
        for (std::size_t s = 0; s < h.dim; ++s) acc += psi[s] * weighted[s];
        elements[n] = acc;
    }
    return elements;
}

// Accumulated perturbative sums over the excited spectrum, with the shared
// degeneracy policy: levels within kDegeneracyGap of E0 are skipped only when
// their coupling to the ground state is negligible.
struct PerturbativeSums {
    double chi_f = 0.0;          // sum V^2 / gap^2
    double riw = 0.0;            // sum V^2 / gap
    double weighted_chi = 0.0;   // sum E_n V^2 / gap^2
};

PerturbativeSums perturbative_sums(const DenseHamiltonian& h, const EigenSystem& es) {
    std::vector<double> v = h1_matrix_elements(h, es);
    const double e0 = es.energies[0];
    PerturbativeSums sums;
    for (std::size_t n = 1; n < h.dim; ++n) {
        double gap = es.energies[n] - e0;
        if (gap <= kDegeneracyGap) {
            if (std::fabs(v[n]) < kNegligibleElement) continue;
            throw DegeneracyError(
                "perturbative sum ill-defined: level " + std::to_string(n)
                    + " lies within " + std::to_string(gap)
                    + " of the ground state with coupling " + std::to_string(v[n]),
                gap);
        }
        double w = v[n] * v[n];
        sums.chi_f += w / (gap * gap);
        sums.riw += w / gap;
        sums.weighted_chi += es.energies[n] * w / (gap * gap);
    }
    return sums;
}

void require_resolvable_ground_state(const EigenSystem& es, double lambda) {
    double gap = es.ground_gap();
    if (gap <= kDegeneracyGap) {
        throw DegeneracyError("ground state degenerate at lambda=" + std::to_string(lambda)
                                  + " (gap " + std::to_string(gap) + ")",
                              gap);
    }
}

}  // namespace

std::vector<double> DenseHamiltonian::dense(double lambda) const {
    std::vector<double> h = bond;
    for (std::size_t s = 0; s < dim; ++s) h[s * dim + s] += lambda * field_diag[s];
    return h;
}

DenseHamiltonian build_hamiltonian(int n_sites) {
    if (n_sites > 12) {
        throw ResourceError("build_hamiltonian: N=" + std::to_string(n_sites)
                            + " exceeds the 4096-state cap (N <= 12)");
    }
    if (n_sites < 2) {
        throw ConfigError("build_hamiltonian: need at least 2 sites");
    }
    DenseHamiltonian h;
    h.n_sites = n_sites;
    h.dim = std::size_t{1} << n_sites;
    h.bond.assign(h.dim * h.dim, 0.0);
    h.field_diag.resize(h.dim);
    for (std::size_t s = 0; s < h.dim; ++s) {
        // H1 = -sum_j sigma_j^z; bit 1 = spin down contributes +1.
        h.field_diag[s] = 2.0 * std::popcount(s) - n_sites;
        // H0 flips the two spins of every bond, including the N -> 1 wrap.
        for (int j = 1; j <= n_sites; ++j) {
            std::size_t mask = (std::size_t{1} << (n_sites - j))
                               | (std::size_t{1} << (n_sites - (j % n_sites) - 1));
            h.bond[s * h.dim + (s ^ mask)] += -1.0;
        }
    }
    return h;
}

EigenSystem jacobi_eigensystem(std::vector<double> matrix, std::size_t dim) {
    if (matrix.size() != dim * dim) {
        throw InputError("jacobi_eigensystem: matrix size does not match dimension");
    }
    const std::size_t n = dim;
    auto at = [&matrix, n](std::size_t i, std::size_t j) -> double& {
        return matrix[i * n + j];
    };

    EigenSystem es;
    es.dim = n;
    es.vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) es.vectors[i * n + i] = 1.0;

    std::vector<double> d(n), b(n), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) b[i] = d[i] = at(i, i);

    double norm = 0.0;
    for (double v : matrix) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
        es.energies = d;
        return es;
    }

    int sweep = 1;
    for (; sweep <= kMaxSweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += at(p, q) * at(p, q);
        if (std::sqrt(2.0 * off2) <= kOffDiagTolerance * norm) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double g = 100.0 * std::fabs(apq);
                // Skip rotations that cannot move the diagonal at this scale.
                if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p])
                              && std::fabs(d[q]) + g == std::fabs(d[q])) {
                    at(p, q) = 0.0;
                    continue;
                }
                double h = d[q] - d[p];
                double t;
                if (std::fabs(h) + g == std::fabs(h)) {
                    t = apq / h;
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);
                double delta = t * apq;
                z[p] -= delta;
                z[q] += delta;
                d[p] -= delta;
                d[q] += delta;
                at(p, q) = 0.0;
                for (std::size_t i = 0; i < p; ++i) {
                    double x = at(i, p), y = at(i, q);
                    at(i, p) = x - s * (y + tau * x);
                    at(i, q) = y + s * (x - tau * y);
                }
                for (std::size_t i = p + 1; i < q; ++i) {
                    double x = at(p, i), y = at(i, q);
                    at(p, i) = x - s * (y + tau * x);
                    at(i, q) = y + s * (x - tau * y);
                }
                for (std::size_t i = q + 1; i < n; ++i) {
                    double x = at(p, i), y = at(q, i);
                    at(p, i) = x - s * (y + tau * x);
                    at(q, i) = y + s * (x - tau * y);
                }
                double* vp = &es.vectors[p * n];
                double* vq = &es.vectors[q * n];
                for (std::size_t i = 0; i < n; ++i) {
                    double x = vp[i], y = vq[i];
                    vp[i] = x - s * (y + tau * x);
                    vq[i] = y + s * (x - tau * y);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if (sweep > kMaxSweeps) {
        throw NumericalError("jacobi_eigensystem: off-diagonal norm still above tolerance after "
                             + std::to_string(kMaxSweeps) + " sweeps");
    }

    // Ascending eigenvalues; stable order for exact ties keeps output
    // deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&d](std::size_t a, std::size_t b2) { return d[a] < d[b2]; });
    es.energies.resize(n);
    std::vector<double> sorted(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        es.energies[r] = d[order[r]];
        std::copy_n(&es.vectors[order[r] * n], n, &sorted[r * n]);
    }
    es.vectors = std::move(sorted);
    return es;
}

EigenSystem eigendecompose(const DenseHamiltonian& h, double lambda) {
    return jacobi_eigensystem(h.dense(lambda), h.dim);
}

double fidelity(int n_sites, double lambda, double delta) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    EigenSystem before = eigendecompose(h, lambda);
    require_resolvable_ground_state(before, lambda);
    EigenSystem after = eigendecompose(h, lambda + delta);
    require_resolvable_ground_state(after, lambda + delta);
    std::span<const double> a = before.eigenvector(0);
    std::span<const double> b = after.eigenvector(0);
    double overlap = 0.0;
    for (std::size_t s = 0; s < h.dim; ++s) overlap += a[s] * b[s];
    return std::min(std::fabs(overlap), 1.0);
}

double chi_f_perturbative(const DenseHamiltonian& h, const EigenSystem& es) {
    return perturbative_sums(h, es).chi_f;
}

double chi_f_perturbative(int n_sites, double lambda) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    EigenSystem es = eigendecompose(h, lambda);
    return chi_f_perturbative(h, es);
}

double w_irr_sudden(const QuenchSpec& spec, int n_sites) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    EigenSystem before = eigendecompose(h, spec.lambda);
    require_resolvable_ground_state(before, spec.lambda);
    EigenSystem after = eigendecompose(h, spec.lambda + spec.delta);
    require_resolvable_ground_state(after, spec.lambda + spec.delta);
    // <psi0|H(lambda+delta)|psi0> = E0(lambda) + delta <psi0|H1|psi0>.
    double work = before.energies[0] + spec.delta * ground_h1_expectation(h, before);
    return work - after.energies[0];
}

double riw_perturbative(const DenseHamiltonian& h, const EigenSystem& es) {
    return perturbative_sums(h, es).riw;
}

double riw_perturbative(int n_sites, double lambda) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    EigenSystem es = eigendecompose(h, lambda);
    return riw_perturbative(h, es);
}

double riw_finite_difference(int n_sites, double lambda, double step) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    double plus = eigendecompose(h, lambda + step).energies[0];
    double center = eigendecompose(h, lambda).energies[0];
    double minus = eigendecompose(h, lambda - step).energies[0];
    return -0.5 * (plus - 2.0 * center + minus) / (step * step);
}

double ground_h1_expectation(const DenseHamiltonian& h, const EigenSystem& es) {
    std::span<const double> psi0 = es.eigenvector(0);
    double acc = 0.0;
    for (std::size_t s = 0; s < h.dim; ++s) acc += h.field_diag[s] * psi0[s] * psi0[s];
    return acc;
}

IdentityReport identity_check(const DenseHamiltonian& h, const EigenSystem& es) {
    PerturbativeSums sums = perturbative_sums(h, es);
    IdentityReport report;
    report.lhs = sums.riw;
    report.rhs = -(es.energies[0] * sums.chi_f - sums.weighted_chi);
    report.abs_gap = std::fabs(report.lhs - report.rhs);
    return report;
}

IdentityReport identity_check(int n_sites, double lambda) {
    DenseHamiltonian h = build_hamiltonian(n_sites);
    EigenSystem es = eigendecompose(h, lambda);
    return identity_check(h, es);
}

}  // namespace quenchlab
