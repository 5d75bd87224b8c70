#pragma once

#include "qhscatter/model.hpp"

// Closed forms for the two reference point-interaction models. Conventions
// match the transfer engine: unit left incidence, psi = e^{ikx} + C e^{-ikx}
// on the left, D e^{ikx} on the right.

namespace qhs {

// Two imaginary spikes -i*lambda at x = -a and +i*lambda at x = +a.
struct TwoDeltaParams {
    double lambda = 1.0; // spike magnitude, > 0
    double a = 1.0;      // half separation, > 0
    double k = 1.0;      // wavenumber, > 0

    double alpha() const { return lambda / (2.0 * k); }
};

// Single spike z*delta(x) with z = 2*lambda*(1 + i*epsilon).
struct SingleDeltaParams {
    double lambda = 1.0;  // > 0
    double epsilon = 0.0; // imaginary fraction of the strength
    double k = 1.0;       // > 0

    double q() const { return k / lambda; }
    complexd z() const { return 2.0 * lambda * complexd{1.0, epsilon}; }
};

// D = 1/(1 + 2i*alpha^2*e^{2ika}*sin 2ka), C = 2i*D*alpha*(1-alpha)*sin 2ka.
ScatteringAmplitudes two_delta_amplitudes(const TwoDeltaParams& p);

// (1 + 4a^2(1-a)^2 sin^2 2ka)/(1 - 4a^2(1-a^2) sin^2 2ka) at a = alpha.
// Equals |C|^2 + |D|^2 of two_delta_amplitudes.
double two_delta_total(const TwoDeltaParams& p);

// D = (1 + iz/2k)^{-1}, C = -(iz/2k)*D.
ScatteringAmplitudes single_delta_amplitudes(const SingleDeltaParams& p);

// (1 - 2*eps*q/(1 + eps^2 + q^2))^{-1}; equals |C|^2 + |D|^2.
// Greater than 1 for eps > 0, less than 1 for eps < 0.
double single_delta_total(const SingleDeltaParams& p);

} // namespace qhs
