#include "qhscatter/boundstate.hpp"
#include "qhscatter/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qhs {

namespace {

constexpr complexd kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxBisection = 200;

void check_model(const ThreeDeltaModel& m) {
    if (!(std::isfinite(m.alpha) && m.alpha > 0.0))
        throw std::invalid_argument("three-delta model: alpha must be finite and > 0");
    if (!(std::isfinite(m.lambda) && m.lambda >= 0.0))
        throw std::invalid_argument("three-delta model: lambda must be finite and >= 0");
    if (!(std::isfinite(m.L) && m.L > 0.0))
        throw std::invalid_argument("three-delta model: L must be finite and > 0");
}

void check_kappa(double kappa) {
    if (!(std::isfinite(kappa) && kappa > 0.0))
        throw std::invalid_argument("three-delta model: kappa must be finite and > 0");
}

// Region amplitudes for a trial kappa, normalized to A = 1.  B, C, D, E
// follow from the matching at x = -L and x = +L; F comes from the
// derivative jump at the binding spike, which keeps it sensitive to kappa
// being off the root (the continuity equation alone would pin |F| = 1
// identically and hide the error).
void fill_coefficients(double kappa, const ThreeDeltaModel& m,
                       BoundStateSolution& s) {
    const complexd u = kI * m.lambda / (2.0 * kappa);
    const double t = std::exp(-2.0 * kappa * m.L);
    const double g = 2.0 * m.alpha / kappa;
    s.A = 1.0;
    s.B = 1.0 - u;
    s.C = u * t;
    s.F = ((-1.0 + u + u * t) + g * (1.0 - u + u * t)) / (1.0 + u + u * t);
    s.D = s.F * (1.0 + u);
    s.E = -s.F * u * t;
}

} // namespace

double eigenvalue_residual(double kappa, const ThreeDeltaModel& m) {
    check_model(m);
    check_kappa(kappa);
    if (m.lambda == 0.0) return kappa - m.alpha;
    const double t = std::exp(-2.0 * kappa * m.L);
    const double ratio = 2.0 * kappa / m.lambda;
    const double correction =
        t / (1.0 + ratio * ratio) * (2.0 * m.alpha + (kappa + m.alpha) * t);
    return kappa + correction - m.alpha;
}

double matching_residual(double kappa, const ThreeDeltaModel& m) {
    check_model(m);
    check_kappa(kappa);
    if (m.lambda == 0.0) return kappa - m.alpha;
    const double v = m.lambda / (2.0 * kappa);
    const double t = std::exp(-2.0 * kappa * m.L);
    const double num = 1.0 + v * v * (1.0 - t * t);
    const double den = 1.0 + v * v * (1.0 - t) * (1.0 - t);
    return kappa * num / den - m.alpha;
}

BoundStateSolution solve_kappa(const ThreeDeltaModel& m, double tol) {
    check_model(m);
    if (!(std::isfinite(tol) && tol > 0.0))
        throw std::invalid_argument("solve_kappa: tol must be finite and > 0");

    BoundStateSolution s;
    if (m.lambda == 0.0) {
        s.kappa = m.alpha;
        fill_coefficients(s.kappa, m, s);
        s.energy = -s.kappa * s.kappa;
        return s;
    }

    double lo = 0.5 * m.alpha;
    double hi = 2.0 * m.alpha;
    double flo = matching_residual(lo, m);
    if (flo >= 0.0)
        throw BracketError(
            "solve_kappa: no sign change on [alpha/2, 2 alpha]; the spikes sit "
            "too close for this branch",
            std::log(3.0) / m.alpha);

    double kappa = lo, f = flo;
    bool converged = false;
    for (int i = 0; i < kMaxBisection; ++i) {
        kappa = 0.5 * (lo + hi);
        f = matching_residual(kappa, m);
        if (std::abs(f) < tol) {
            converged = true;
            break;
        }
        if ((f < 0.0) == (flo < 0.0)) {
            lo = kappa;
            flo = f;
        } else {
            hi = kappa;
        }
    }
    if (!converged)
        throw ConvergenceError("solve_kappa: bisection did not reach tolerance");

    s.kappa = kappa;
    fill_coefficients(kappa, m, s);
    s.energy = -kappa * kappa;
    return s;
}

double large_L_kappa(const ThreeDeltaModel& m) {
    check_model(m);
    if (m.lambda == 0.0) return m.alpha;
    const double ratio = 2.0 * m.alpha / m.lambda;
    return m.alpha *
           (1.0 - 2.0 * std::exp(-2.0 * m.alpha * m.L) / (1.0 + ratio * ratio));
}

PtSymmetryReport pt_symmetry_check(const BoundStateSolution& s,
                                   const ThreeDeltaModel& m) {
    check_model(m);
    check_kappa(s.kappa);
    PtSymmetryReport out;
    out.amp_defect = std::abs(std::abs(s.A) - std::abs(s.F));
    out.phase = std::arg(s.F / std::conj(s.A));
    return out;
}

PiecewiseWave bound_state_wave(const BoundStateSolution& s,
                               const ThreeDeltaModel& m) {
    check_model(m);
    check_kappa(s.kappa);
    const complexd wn = kI * s.kappa;
    PiecewiseWave w;
    w.regions.push_back({-kInf, -m.L, complexd{0.0}, wn, s.A, wn});
    w.regions.push_back({-m.L, 0.0, s.C, wn, s.B, wn});
    w.regions.push_back({0.0, m.L, s.D, wn, s.E, wn});
    w.regions.push_back({m.L, kInf, s.F, wn, complexd{0.0}, wn});
    return w;
}

} // namespace qhs
