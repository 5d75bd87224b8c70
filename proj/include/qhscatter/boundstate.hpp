#pragma once

#include "qhscatter/current.hpp"
#include "qhscatter/model.hpp"

// Bound state of V(x) = -2*alpha*delta(x) + i*lambda*(delta(x-L) - delta(x+L)).
// The decaying ansatz has six region amplitudes,
//   x < -L:      A e^{kx}
//   -L < x < 0:  B e^{kx} + C e^{-kx}
//   0 < x < L:   D e^{-kx} + E e^{kx}
//   x > L:       F e^{-kx}
// (k = kappa), E = -kappa^2, and a single real kappa root near alpha.

namespace qhs {

struct ThreeDeltaModel {
    double alpha = 1.0;  // binding spike weight, > 0
    double lambda = 0.0; // imaginary spike magnitude, >= 0
    double L = 1.0;      // imaginary spike distance from origin, > 0
};

struct BoundStateSolution {
    double kappa = 0.0;
    complexd A{0.0}, B{0.0}, C{0.0}, D{0.0}, E{0.0}, F{0.0};
    double energy = 0.0; // -kappa^2
};

// The compact form of the kappa condition,
//   f(kappa) = kappa + t/(1+(2 kappa/lambda)^2) * (2 alpha + (kappa+alpha) t)
//              - alpha,       t = e^{-2 kappa L},
// with the correction term defined as 0 at lambda = 0.  Kept as the quick
// screening residual; see matching_residual for the form the solver roots.
double eigenvalue_residual(double kappa, const ThreeDeltaModel& m);

// Residual of the full six-amplitude matching problem, reduced to
//   f(kappa) = kappa (1 + v^2 (1-t^2)) / (1 + v^2 (1-t)^2) - alpha,
//   v = lambda/(2 kappa),  t = e^{-2 kappa L}.
// Its root makes the region amplitudes satisfy every continuity and jump
// condition simultaneously; the compact form above deviates from this one
// at order t^2 v^2 and its root fails the jump conditions by that much.
double matching_residual(double kappa, const ThreeDeltaModel& m);

// Bisection for the root of matching_residual on [alpha/2, 2*alpha], the
// branch that continues kappa = alpha from lambda = 0.  Stops at
// |f| < tol.  Throws BracketError when f(alpha/2) >= 0 (the interval only
// brackets this branch once e^{-alpha L} < 1/3, i.e. L > ln(3)/alpha, which
// the error reports as suggested_min_L); ConvergenceError if the iteration
// cap is hit first.
BoundStateSolution solve_kappa(const ThreeDeltaModel& m, double tol = 1e-12);

// kappa ~ alpha [1 - 2 e^{-2 alpha L} / (1 + (2 alpha/lambda)^2)], the
// leading exponentially small shift; returns alpha at lambda = 0.
double large_L_kappa(const ThreeDeltaModel& m);

// How well the solved state realizes psi(-x) = e^{i phi} conj(psi(x)):
// amp_defect = ||A| - |F|| vanishes exactly at the root and grows linearly
// when kappa is off; phase is the realized phi = arg(F / conj(A)).
struct PtSymmetryReport {
    double amp_defect = 0.0;
    double phase = 0.0;
};

PtSymmetryReport pt_symmetry_check(const BoundStateSolution& s,
                                   const ThreeDeltaModel& m);

// The four-region wavefunction as a PiecewiseWave (wavenumbers i*kappa), for
// current and continuity evaluation.
PiecewiseWave bound_state_wave(const BoundStateSolution& s,
                               const ThreeDeltaModel& m);

} // namespace qhs
