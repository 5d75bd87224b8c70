#pragma once

#include <vector>

#include "qhscatter/model.hpp"

// Probability current j = -i(psi* psi' - psi psi'*) and the integrated
// continuity identity, evaluated exactly for piecewise plane-wave solutions.
//
// Sign convention, fixed by direct computation from psi'' = (V - E) psi:
//     dj/dx = +2 Im V(x) |psi(x)|^2
// so the integrated form used here is
//     j(+inf) - j(-inf) = +2 [ sum_d Im(z_d)|psi(x_d)|^2
//                              + sum_seg Im(V) * integral |psi|^2 ].
// Gain (Im V > 0) raises the outgoing current, loss lowers it; the test
// suite checks the identity at 1e-10 against full transfer-matrix solves.

namespace qhs {

// psi(x) = amp_right * e^{+i*wn_right*x} + amp_left * e^{-i*wn_left*x}.
// Complex wavenumbers cover evanescent and bound pieces: wn = i*kappa gives
// e^{-kappa x} for the right term and e^{+kappa x} for the left term.
struct WaveRegion {
    double x_lo = 0.0; // may be -inf
    double x_hi = 0.0; // may be +inf
    complexd amp_right{0.0, 0.0};
    complexd amp_wavenum_right{0.0, 0.0};
    complexd amp_left{0.0, 0.0};
    complexd amp_wavenum_left{0.0, 0.0};
};

struct PiecewiseWave {
    std::vector<WaveRegion> regions; // tile the line in order

    const WaveRegion& region_at(double x) const; // interior lookup
    complexd value(double x) const;
    complexd derivative(double x) const;
};

// j at an interior point, from the closed-form derivative.
// Throws BoundaryError when x sits on a region edge.
double probability_current(const PiecewiseWave& w, double x);

struct ContinuityDefect {
    double lhs = 0.0; // j(+inf side) - j(-inf side)
    double rhs = 0.0; // +2 * (delta and segment contributions), see above
};

// Both sides of the integrated identity, each evaluated independently and in
// closed form. The caller guarantees w solves the Schrodinger equation for p.
ContinuityDefect continuity_defect(const Potential1D& p, const PiecewiseWave& w);

} // namespace qhs
