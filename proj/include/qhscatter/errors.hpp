#pragma once

#include <stdexcept>
#include <string>

namespace qhs {

// Segment intervals intersect.
struct OverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A delta spike sits strictly inside a segment's open interior.
struct PlacementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k^2 - V vanished exactly; the interior wavenumber has no usable branch.
struct DegenerateBranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix entry needed for inversion is numerically zero (spectral
// singularity or formula pole). Raised instead of returning infinities.
struct SingularCompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested at a point where the piecewise form is not smooth
// (region edge, or the corrected wave at the spike).
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracket [alpha/2, 2*alpha] does not enclose a sign change.
struct BracketError : std::runtime_error {
    BracketError(const std::string& what, double suggested_min_L_)
        : std::runtime_error(what), suggested_min_L(suggested_min_L_) {}
    double suggested_min_L;
};

// Iteration limit hit before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid parameters violate spacing << delta width << 1/lambda << half width.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qhs
