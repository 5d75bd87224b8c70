#pragma once

#include "qhscatter/current.hpp"
#include "qhscatter/model.hpp"

// Complex 2x2 transfer-matrix engine. Works on (right-mover, left-mover)
// coefficient pairs for psi = A e^{i kappa x} + B e^{-i kappa x} and composes
// point interfaces left to right. Free stretches cost nothing: coefficients
// are kept relative to the global origin, so only breakpoints are visited.

namespace qhs {

struct Matrix2c {
    complexd m11{1.0}, m12{0.0};
    complexd m21{0.0}, m22{1.0};

    static Matrix2c identity() { return {}; }

    complexd det() const { return m11 * m22 - m12 * m21; }

    Matrix2c operator*(const Matrix2c& rhs) const {
        return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
                m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
    }
};

// Matching matrix for a point spike of strength z at the origin, common
// wavenumber k on both sides: psi continuous, psi' jumps by z*psi.
// (A+, B+) = M (A-, B-).  Unit determinant.  Position dependence is the
// caller's job via phase conjugation.
Matrix2c delta_interface_matrix(double k, complexd z);

// Coefficient transport across a constant-V stretch of the given length,
// exterior wavenumber k on both ends.  Input pair is referenced to the
// segment's left edge, output to its right edge; V = 0 gives
// diag(e^{ikL}, e^{-ikL}).  The interior wavenumber is sqrt(k^2 - V) on the
// branch with Im >= 0 (Re >= 0 when real).  Throws DegenerateBranchError
// when k^2 == V exactly; nudge k instead.
Matrix2c segment_propagation_matrix(double k, complexd V, double length);

// Full matching solve for unit left incidence:
// psi = e^{ikx} + C e^{-ikx} far left, D e^{ikx} far right.
// Empty potential gives (C, D) = (0, 1).  Throws SingularCompositionError
// when the composed matrix cannot be inverted for C (spectral singularity).
ScatteringAmplitudes scattering_coefficients(const Potential1D& p, double k);

ProbabilitySummary probability_summary(const ScatteringAmplitudes& s);

// Region-by-region wavefunction for the same solve, suitable for current
// and continuity evaluation.  Exterior regions carry wavenumber k, segment
// interiors their own kappa.  Amplitudes are continuous at every breakpoint
// by construction.
PiecewiseWave scattering_wave(const Potential1D& p, double k);

} // namespace qhs
