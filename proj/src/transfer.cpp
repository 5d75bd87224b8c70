#include "qhscatter/transfer.hpp"
#include "qhscatter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qhs {

namespace {

constexpr complexd kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_k(double k) {
    if (!(std::isfinite(k) && k > 0.0))
        throw std::invalid_argument("transfer: k must be finite and > 0");
}

// sqrt(k^2 - V) on the Im >= 0 branch (Re >= 0 along the real axis), so
// evanescent components decay to the right.
complexd region_wavenumber(double k, complexd V) {
    const complexd arg = k * k - V;
    if (arg == complexd{0.0, 0.0})
        throw DegenerateBranchError("k^2 equals the segment potential exactly; shift k");
    complexd kap = std::sqrt(arg);
    if (kap.imag() < 0.0 || (kap.imag() == 0.0 && kap.real() < 0.0)) kap = -kap;
    return kap;
}

// One breakpoint of the piecewise solution: the local wavenumber changes
// from km to kp and a spike of total strength z may sit there.
struct Interface {
    double x = 0.0;
    complexd km{0.0};
    complexd kp{0.0};
    complexd z{0.0};
};

// Matrix acting on origin-referenced coefficient pairs across one interface.
// Built from psi continuity plus the derivative jump
//   i kp (a' - b') = i km (a - b) + z (a + b)
// on the local values a = A e^{i km x0}, b = B e^{-i km x0}.
Matrix2c interface_matrix(const Interface& f) {
    const complexd s = (f.kp + f.km) / (2.0 * f.kp);
    const complexd d = (f.kp - f.km) / (2.0 * f.kp);
    const complexd w = f.z / (2.0 * kI * f.kp);
    Matrix2c local{s + w, d + w, d - w, s - w};

    const complexd em = std::exp(kI * f.km * f.x);  // into local values
    const complexd ep = std::exp(kI * f.kp * f.x);  // back to coefficients
    Matrix2c out;
    out.m11 = local.m11 * em / ep;
    out.m12 = local.m12 / (em * ep);
    out.m21 = local.m21 * em * ep;
    out.m22 = local.m22 * ep / em;
    return out;
}

// Breakpoints of the potential, left to right, with per-side wavenumbers.
// Coincident delta and segment-edge positions merge into one interface.
// Region values come from interval midpoints; the unbounded end regions
// are potential-free by construction.
std::vector<Interface> build_interfaces(const Potential1D& p, double k) {
    std::vector<double> xs;
    for (const auto& d : p.deltas()) xs.push_back(d.position);
    for (const auto& s : p.segments()) {
        xs.push_back(s.x_lo);
        xs.push_back(s.x_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<complexd> kappas(xs.size() + 1, complexd{k});
    for (std::size_t i = 1; i < xs.size(); ++i)
        kappas[i] = region_wavenumber(k, p.value_at(0.5 * (xs[i - 1] + xs[i])));

    std::vector<Interface> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Interface f;
        f.x = xs[i];
        f.km = kappas[i];
        f.kp = kappas[i + 1];
        for (const auto& d : p.deltas())
            if (d.position == xs[i]) f.z += d.strength;
        out.push_back(f);
    }
    return out;
}

Matrix2c total_transfer(const Potential1D& p, double k) {
    Matrix2c t = Matrix2c::identity();
    for (const auto& f : build_interfaces(p, k)) t = interface_matrix(f) * t;
    return t;
}

complexd reflection_from(const Matrix2c& t) {
    const double scale = std::max({std::abs(t.m11), std::abs(t.m12),
                                   std::abs(t.m21), std::abs(t.m22)});
    if (std::abs(t.m22) < 1e-14 * scale)
        throw SingularCompositionError(
            "transfer matrix is singular for left incidence (spectral singularity?)");
    return -t.m21 / t.m22;
}

} // namespace

Matrix2c delta_interface_matrix(double k, complexd z) {
    check_k(k);
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
        throw std::invalid_argument("transfer: spike strength must be finite");
    const complexd w = z / (2.0 * kI * k);
    return {1.0 + w, w, -w, 1.0 - w};
}

Matrix2c segment_propagation_matrix(double k, complexd V, double length) {
    check_k(k);
    if (!(std::isfinite(length) && length > 0.0))
        throw std::invalid_argument("transfer: segment length must be finite and > 0");
    const complexd kap = region_wavenumber(k, V);
    const complexd c = std::cos(kap * length);
    const complexd s = std::sin(kap * length);
    const complexd plus = (k * k + kap * kap) / (2.0 * k * kap);
    const complexd minus = (kap * kap - k * k) / (2.0 * k * kap);
    return {c + kI * plus * s, kI * minus * s, -kI * minus * s, c - kI * plus * s};
}

ScatteringAmplitudes scattering_coefficients(const Potential1D& p, double k) {
    check_k(k);
    const Matrix2c t = total_transfer(p, k);
    const complexd C = reflection_from(t);
    const complexd D = t.m11 + t.m12 * C;
    return {k, C, D};
}

ProbabilitySummary probability_summary(const ScatteringAmplitudes& s) {
    const double R = std::norm(s.refl);
    const double T = std::norm(s.trans);
    return {R, T, R + T};
}

PiecewiseWave scattering_wave(const Potential1D& p, double k) {
    check_k(k);
    const auto faces = build_interfaces(p, k);
    const Matrix2c t = total_transfer(p, k);
    const complexd C = reflection_from(t);

    PiecewiseWave w;
    complexd A{1.0}, B{C};
    complexd kap{k};
    double lo = -kInf;
    for (const auto& f : faces) {
        w.regions.push_back({lo, f.x, A, kap, B, kap});
        const Matrix2c m = interface_matrix(f);
        const complexd An = m.m11 * A + m.m12 * B;
        B = m.m21 * A + m.m22 * B;
        A = An;
        kap = f.kp;
        lo = f.x;
    }
    w.regions.push_back({lo, kInf, A, kap, B, kap});
    return w;
}

} // namespace qhs
