#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qhscatter/errors.hpp"

// Shared domain types. Units: hbar = 2m = 1, so H = -d^2/dx^2 + V(x),
// E = k^2 for scattering states and E = -kappa^2 for bound states.

namespace qhs {

using complexd = std::complex<double>;

// Point interaction z*delta(x - position). The derivative of any solution
// jumps by z*psi at the spike; z may be any finite complex number.
struct DeltaSpike {
    double position = 0.0;
    complexd strength{0.0, 0.0};
};

// Constant complex potential value on the open interval (x_lo, x_hi).
struct UniformSegment {
    double x_lo = 0.0;
    double x_hi = 0.0;
    complexd value{0.0, 0.0};
};

// Deltas plus non-overlapping constant segments, zero elsewhere, sorted by
// position. Deltas on segment endpoints are allowed; deltas strictly inside
// a segment are rejected so every interface stays a single matching point.
class Potential1D {
  public:
    Potential1D() = default;

    static Potential1D build(std::vector<DeltaSpike> deltas,
                             std::vector<UniformSegment> segments);

    const std::vector<DeltaSpike>& deltas() const { return deltas_; }
    const std::vector<UniformSegment>& segments() const { return segments_; }

    // True when every strength and segment value has zero imaginary part.
    bool real_valued() const;

    // Constant potential value at x (0 outside all segments). Segment values
    // apply on the open interior; at shared breakpoints the value is not
    // needed by any computation here and the left segment wins.
    complexd value_at(double x) const;

  private:
    std::vector<DeltaSpike> deltas_;
    std::vector<UniformSegment> segments_;
};

// JSON round-trip, schema:
// {"deltas":[{"x":..,"re":..,"im":..}], "segments":[{"lo":..,"hi":..,"re":..,"im":..}]}
std::string to_json(const Potential1D& p);
Potential1D potential_from_json(const std::string& text);

// Left-incidence scattering data at real wavenumber k > 0:
// psi = e^{ikx} + refl*e^{-ikx} far left, trans*e^{ikx} far right.
struct ScatteringAmplitudes {
    double k = 0.0;
    complexd refl{0.0, 0.0};
    complexd trans{0.0, 0.0};
};

struct ProbabilitySummary {
    double R = 0.0;
    double T = 0.0;
    double total = 0.0;
};

} // namespace qhs
