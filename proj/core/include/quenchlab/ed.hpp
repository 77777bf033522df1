#pragma once

// Brute-force exact diagonalization of small periodic Ising chains (N <= 12,
// dimension <= 4096). This is the independent oracle for the zero-temperature
// relations between ground-state fidelity and irreversible work: everything
// here works on the full 2^N spectrum with no fermionic shortcut.

#include <cstddef>
#include <span>
#include <vector>

namespace quenchlab {

/// H(lambda) = H0 + lambda*H1 with H0 = -sum_j sigma_j^x sigma_{j+1}^x
/// (periodic, site N+1 = 1) and H1 = -sum_j sigma_j^z.
///
/// Basis convention: computational sigma^z basis; site 1 is the most
/// significant bit of the state index, bit value 1 means spin down
/// (sigma^z = -1). H1 is diagonal in this basis and is stored as its
/// diagonal; H0 is stored dense and is symmetric by construction.
///
/// For N = 2 the periodic sum counts the single bond twice (j = 1 and j = 2
/// both couple sites 1 and 2); the Hamiltonian is built exactly as the sum
/// reads, so physics comparisons should stick to N >= 4.
struct DenseHamiltonian {
    int n_sites = 0;
    std::size_t dim = 0;
    std::vector<double> bond;        // H0, row-major dim x dim
    std::vector<double> field_diag;  // diagonal of H1

    /// Dense H0 + lambda*H1, row-major.
    std::vector<double> dense(double lambda) const;
};

/// Build the two parts of H for 2 <= N <= 12. N > 12 exceeds the 4096
/// dimension cap and throws ResourceError.
DenseHamiltonian build_hamiltonian(int n_sites);

/// Full spectrum of a dense symmetric matrix. Energies ascend; eigenvector n
/// is the contiguous row n of `vectors`.
struct EigenSystem {
    std::size_t dim = 0;
    std::vector<double> energies;
    std::vector<double> vectors;  // row-major, row n = eigenvector n

    std::span<const double> eigenvector(std::size_t n) const {
        return std::span<const double>(vectors).subspan(n * dim, dim);
    }
    double ground_gap() const { return energies.at(1) - energies.at(0); }
};

/// Cyclic Jacobi diagonalization of a dense symmetric matrix (row-major).
/// Sweeps run until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F (at most 60 sweeps, else NumericalError). Deterministic:
/// identical input bits give identical output bits.
EigenSystem jacobi_eigensystem(std::vector<double> matrix, std::size_t dim);

EigenSystem eigendecompose(const DenseHamiltonian& h, double lambda);

/// A sudden quench lambda -> lambda + delta. The infinitesimal-quench
/// expansions assume |delta| <= 1e-2.
struct QuenchSpec {
    double lambda = 0.0;
    double delta = 0.0;
};

/// Ground states within this distance of E0 count as a degenerate manifold.
inline constexpr double kDegeneracyGap = 1e-8;

/// |<psi0(lambda)|psi0(lambda+delta)>|, in [0, 1]. Throws DegeneracyError
/// (naming the gap) if either ground state is degenerate.
double fidelity(int n_sites, double lambda, double delta);

/// chi_F = sum_{n != 0} |<psi_n|H1|psi_0>|^2 / (E_n - E_0)^2 over the full
/// spectrum. Excited states inside the degeneracy window are dropped only if
/// their matrix element is < 1e-10, else DegeneracyError.
double chi_f_perturbative(const DenseHamiltonian& h, const EigenSystem& es);
double chi_f_perturbative(int n_sites, double lambda);

/// <W_irr> for a sudden quench:
///   <psi0(lambda)|H(lambda+delta)|psi0(lambda)> - E0(lambda+delta).
/// Non-negative for any delta.
double w_irr_sudden(const QuenchSpec& spec, int n_sites);

/// RIW = sum_{n != 0} |<psi_n|H1|psi_0>|^2 / (E_n - E_0), the positive form
/// algebraically equal to -(1/2) d^2 E0 / d lambda^2.
double riw_perturbative(const DenseHamiltonian& h, const EigenSystem& es);
double riw_perturbative(int n_sites, double lambda);

/// The finite-difference variant of the same quantity:
/// -(1/2) * central second difference of E0(lambda) with the given step.
double riw_finite_difference(int n_sites, double lambda, double step = 1e-3);

/// <psi_0|H1|psi_0>; by Hellmann-Feynman this equals dE0/dlambda.
double ground_h1_expectation(const DenseHamiltonian& h, const EigenSystem& es);

/// Both sides of the RIW <-> chi_F identity evaluated from one spectrum:
///   lhs = RIW (perturbative),
///   rhs = -[E0 chi_F - sum_{n != 0} E_n |<psi_n|H1|psi_0>|^2 / (E_0 - E_n)^2].
struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_gap = 0.0;
};

IdentityReport identity_check(const DenseHamiltonian& h, const EigenSystem& es);
IdentityReport identity_check(int n_sites, double lambda);

}  // namespace quenchlab
