#pragma once

// Free-fermion solution of the periodic transverse-field Ising chain
//     H = -sum_j [ lambda sigma_j^z + sigma_j^x sigma_{j+1}^x ],
// restricted to the even-parity momentum sector, which carries the exact
// ground state for even N.

#include <span>
#include <vector>

namespace quenchlab {

/// One chain instance: even site count N >= 2 and transverse field lambda >= 0.
struct ChainParams {
    int n_sites = 2;
    double field = 0.0;

    /// Throws ConfigError unless N is even and >= 2 and field >= 0.
    void validate() const;
};

/// Quasi-particle energy eps_k(lambda) = 2 sqrt(1 + lambda^2 - 2 lambda cos k).
double quasiparticle_energy(double lambda, double k);

/// Bogoliubov angle phi_k with cos phi = 2(lambda - cos k)/eps_k and
/// sin phi = 2 sin k / eps_k, resolved through atan2 so the quadrant is
/// unambiguous. Throws SingularityError where the gap closes (lambda=1, k=0).
double bogoliubov_angle(double lambda, double k);

struct MomentumMode {
    double k;       // wavenumber in (-pi, pi), never 0 or pi
    double energy;  // eps_k(lambda) >= 0
    double angle;   // phi_k
};

/// The even-parity momentum set {+-pi(2n-1)/N : n = 1..N/2}, all N modes,
/// ordered by increasing k. Immutable after construction.
class MomentumGrid {
public:
    static MomentumGrid build(const ChainParams& params);

    int n_sites() const { return n_sites_; }
    double field() const { return field_; }
    std::span<const MomentumMode> modes() const { return modes_; }
    /// The N/2 modes with k > 0 (second half of the ordered grid).
    std::span<const MomentumMode> positive_modes() const {
        return std::span<const MomentumMode>(modes_).subspan(modes_.size() / 2);
    }

private:
    int n_sites_ = 0;
    double field_ = 0.0;
    std::vector<MomentumMode> modes_;
};

/// Ground-state energy as the exact mode sum
///   E0 = -sum_{k in K} sqrt(1 + lambda^2 - 2 lambda cos k)
/// over all N even-sector momenta. Equals -N at lambda = 0.
double ground_energy_sum(const ChainParams& params);

/// Continuum-limit ground energy,
///   E0 ~= -(N/pi) int_{pi/N}^{pi(N-1)/N} sqrt(1 + lambda^2 - 2 lambda cos k) dk.
double ground_energy_integral(const ChainParams& params);

/// Closed form E0 ~= -(2N/pi)(1+lambda) E(4 lambda/(1+lambda)^2).
double ground_energy_elliptic(const ChainParams& params);

}  // namespace quenchlab
