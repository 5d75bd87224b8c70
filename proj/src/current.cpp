#include "qhscatter/current.hpp"

#include <cmath>
#include <limits>

namespace qhs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const complexd kI{0.0, 1.0};

complexd region_value(const WaveRegion& r, double x) {
    return r.amp_right * std::exp(kI * r.amp_wavenum_right * x) +
           r.amp_left * std::exp(-kI * r.amp_wavenum_left * x);
}

complexd region_derivative(const WaveRegion& r, double x) {
    return kI * r.amp_wavenum_right * r.amp_right * std::exp(kI * r.amp_wavenum_right * x) -
           kI * r.amp_wavenum_left * r.amp_left * std::exp(-kI * r.amp_wavenum_left * x);
}

bool purely_real(const complexd& z) { return z.imag() == 0.0; }
bool purely_imag(const complexd& z) { return z.real() == 0.0; }

// Current carried by a region in the two cases where it is x-independent:
// equal real wavenumbers (j = 2k(|A|^2 - |B|^2), cross terms cancel exactly)
// and equal purely imaginary wavenumbers (j = 4*kappa*Im(conj(A)*B)).
// These cover every exterior region produced by the scattering and
// bound-state assemblers.
double region_constant_current(const WaveRegion& r) {
    const complexd wr = r.amp_wavenum_right;
    const complexd wl = r.amp_wavenum_left;
    if (purely_real(wr) && purely_real(wl) && wr.real() == wl.real()) {
        const double k = wr.real();
        return 2.0 * k * (std::norm(r.amp_right) - std::norm(r.amp_left));
    }
    if (purely_imag(wr) && purely_imag(wl) && wr.imag() == wl.imag()) {
        const double kappa = wr.imag();
        return 4.0 * kappa * std::imag(std::conj(r.amp_right) * r.amp_left);
    }
    throw BoundaryError("region current is x-dependent; need equal real or "
                        "equal imaginary wavenumbers");
}

// integral over [a, b] of e^{i*mu*x} dx, with the mu -> 0 limit b - a.
complexd phase_integral(complexd mu, double a, double b) {
    if (mu == complexd{0.0, 0.0}) return {b - a, 0.0};
    return (std::exp(kI * mu * b) - std::exp(kI * mu * a)) / (kI * mu);
}

// integral over [a, b] of |A e^{i*wr*x} + B e^{-i*wl*x}|^2 dx, exactly.
double abs2_integral(const WaveRegion& r, double a, double b) {
    const complexd A = r.amp_right, B = r.amp_left;
    const complexd wr = r.amp_wavenum_right, wl = r.amp_wavenum_left;
    complexd acc = std::norm(A) != 0.0
                       ? complexd(std::norm(A), 0.0) * phase_integral(wr - std::conj(wr), a, b)
                       : complexd{0.0, 0.0};
    if (std::norm(B) != 0.0)
        acc += complexd(std::norm(B), 0.0) * phase_integral(std::conj(wl) - wl, a, b);
    const complexd cross = A * std::conj(B);
    if (cross != complexd{0.0, 0.0}) {
        acc += cross * phase_integral(wr + std::conj(wl), a, b);
        acc += std::conj(cross) * phase_integral(-(std::conj(wr) + wl), a, b);
    }
    return acc.real();
}

} // namespace

const WaveRegion& PiecewiseWave::region_at(double x) const {
    for (const auto& r : regions) {
        if (x >= r.x_lo && x <= r.x_hi) return r;
    }
    throw BoundaryError("x outside the tiled range");
}

complexd PiecewiseWave::value(double x) const { return region_value(region_at(x), x); }

complexd PiecewiseWave::derivative(double x) const {
    return region_derivative(region_at(x), x);
}

double probability_current(const PiecewiseWave& w, double x) {
    const WaveRegion* inside = nullptr;
    for (const auto& r : w.regions) {
        if (x > r.x_lo && x < r.x_hi) {
            inside = &r;
            break;
        }
        if (x == r.x_lo || x == r.x_hi)
            throw BoundaryError("current requested on a region edge");
    }
    if (!inside) throw BoundaryError("x outside the tiled range");
    const complexd psi = region_value(*inside, x);
    const complexd dpsi = region_derivative(*inside, x);
    return 2.0 * std::imag(std::conj(psi) * dpsi);
}

ContinuityDefect continuity_defect(const Potential1D& p, const PiecewiseWave& w) {
    if (w.regions.empty()) throw std::invalid_argument("empty wave");

    ContinuityDefect d;
    d.lhs = region_constant_current(w.regions.back()) -
            region_constant_current(w.regions.front());

    double acc = 0.0;
    for (const auto& spike : p.deltas()) {
        if (spike.strength.imag() == 0.0) continue;
        acc += spike.strength.imag() * std::norm(w.value(spike.position));
    }
    for (const auto& r : w.regions) {
        if (r.x_lo == -kInf || r.x_hi == kInf) continue; // V = 0 outside segments
        const complexd V = p.value_at(0.5 * (r.x_lo + r.x_hi));
        if (V.imag() == 0.0) continue;
        acc += V.imag() * abs2_integral(r, r.x_lo, r.x_hi);
    }
    d.rhs = 2.0 * acc;
    return d;
}

} // namespace qhs
