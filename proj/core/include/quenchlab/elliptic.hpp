#pragma once

// Complete elliptic integrals K(m) and E(m) in the parameter convention
// (m, not the modulus k), evaluated through the arithmetic-geometric mean.

namespace quenchlab {

/// Arithmetic-geometric mean of two positive numbers.
/// Iterates a <- (a+b)/2, b <- sqrt(a*b) until |a-b| <= 1e-15*a.
double agm(double a, double b);

/// Complete elliptic integral of the first kind,
/// K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt, for 0 <= m < 1.
/// K diverges as m -> 1; callers wanting the asymptote use
/// K(m) ~ -ln(1-m)/2 + 2 ln 2 themselves.
double elliptic_k(double m);

/// Complete elliptic integral of the second kind,
/// E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt, for 0 <= m <= 1.
/// E(1) returns exactly 1.
double elliptic_e(double m);

struct EllipticEDerivatives {
    double first;   // dE/dm  = (E - K) / (2m)
    double second;  // d2E/dm2 = [2(m-1)K - (m-2)E] / (4(m-1)m^2)
};

/// First two m-derivatives of E(m), valid on the open interval 0 < m < 1.
EllipticEDerivatives elliptic_e_derivatives(double m);

}  // namespace quenchlab
