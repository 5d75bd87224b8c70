#include "qhscatter/metric.hpp"
#include "qhscatter/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qhs {

namespace {

constexpr complexd kI{0.0, 1.0};

void check_params(const SingleDeltaParams& p) {
    if (!(std::isfinite(p.lambda) && p.lambda > 0.0))
        throw std::invalid_argument("metric: lambda must be finite and > 0");
    if (!std::isfinite(p.epsilon))
        throw std::invalid_argument("metric: epsilon must be finite");
    if (!(std::isfinite(p.k) && p.k > 0.0))
        throw std::invalid_argument("metric: k must be finite and > 0");
}

void check_order_range(const SingleDeltaParams& p) {
    if (!(std::abs(p.epsilon) < 1.0))
        throw std::invalid_argument(
            "metric: first-order flux bookkeeping needs |epsilon| < 1");
}

// Pieces shared by the closed-form wave and its asymptotics.  Convolving the
// kernel against the plane-wave solution leaves three exact terms: the two
// plane waves pick up order-eps shifts through
//   delta = (eps/2) lambda k/(lambda^2+k^2)
// and an evanescent e^{-lambda|x|} tail with coefficient (eps/2)*tail.
struct WavePieces {
    complexd C, D;
    double delta;
    complexd tail;
};

WavePieces wave_pieces(const SingleDeltaParams& p) {
    const auto amp = single_delta_amplitudes(p);
    const double lam = p.lambda, k = p.k;
    WavePieces out;
    out.C = amp.refl;
    out.D = amp.trans;
    out.delta = 0.5 * p.epsilon * lam * k / (lam * lam + k * k);
    out.tail = (kI * lam / 2.0) *
               (1.0 / complexd{lam, -k} + (out.C + out.D) / complexd{lam, k});
    return out;
}

} // namespace

complexd eta1_value(double x, double y, double lambda) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw std::invalid_argument("eta1_value: lambda must be finite and > 0");
    if (!(std::isfinite(x) && std::isfinite(y)))
        throw std::invalid_argument("eta1_value: x, y must be finite");
    const double rx = std::abs(x), ry = std::abs(y);
    if (rx == ry) return {0.0, 0.0};
    const double sign = ry > rx ? 1.0 : -1.0;
    return kI * (0.5 * lambda * sign * std::exp(-lambda * std::abs(rx - ry)));
}

complexd corrected_wavefunction(double x, const SingleDeltaParams& p) {
    check_params(p);
    if (!std::isfinite(x))
        throw std::invalid_argument("corrected_wavefunction: x must be finite");
    if (x == 0.0)
        throw BoundaryError("corrected_wavefunction: x = 0 is the spike location");

    const auto wp = wave_pieces(p);
    const complexd cross = wp.delta * (wp.C + wp.D);
    const complexd fwd = std::exp(kI * p.k * x);
    const complexd bwd = 1.0 / fwd;
    const complexd tail =
        0.5 * p.epsilon * wp.tail * std::exp(-p.lambda * std::abs(x));
    if (x > 0.0) return (wp.D - cross) * fwd + wp.delta * bwd + tail;
    return (1.0 + wp.delta) * fwd + (wp.C - cross) * bwd + tail;
}

CorrectedWave corrected_wave_asymptotics(CorrectedWave::Region region,
                                         const SingleDeltaParams& p) {
    check_params(p);
    const auto wp = wave_pieces(p);
    const complexd cross = wp.delta * (wp.C + wp.D);
    CorrectedWave out;
    out.region = region;
    out.epsilon = p.epsilon;
    out.q = p.q();
    if (region == CorrectedWave::Region::right) {
        out.amp_out = wp.D - cross;
        out.amp_in = wp.delta;
    } else {
        out.amp_out = wp.C - cross;
        out.amp_in = 1.0 + wp.delta;
    }
    return out;
}

CorrectedFluxFactors corrected_flux_factors(const SingleDeltaParams& p) {
    check_params(p);
    check_order_range(p);
    const double q = p.q();
    const double common = 1.0 + p.epsilon * q / (q * q + 1.0);
    return {common, common / (q * q + 1.0), common * q * q / (q * q + 1.0)};
}

FluxDecomposition corrected_flux_decomposition(const SingleDeltaParams& p) {
    check_params(p);
    check_order_range(p);
    const auto left = corrected_wave_asymptotics(CorrectedWave::Region::left, p);
    const auto right = corrected_wave_asymptotics(CorrectedWave::Region::right, p);
    return {std::norm(left.amp_in), std::norm(left.amp_out),
            std::norm(right.amp_out)};
}

namespace {

// Second difference plus diagonal, zero boundary values.
void apply_hamiltonian(const std::vector<complexd>& diag,
                       const std::vector<complexd>& in, double h,
                       std::vector<complexd>& out) {
    const std::size_t n = in.size();
    const double ih2 = 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) {
        complexd acc = 2.0 * in[i];
        if (i > 0) acc -= in[i - 1];
        if (i + 1 < n) acc -= in[i + 1];
        out[i] = acc * ih2 + diag[i] * in[i];
    }
}

// Kernel row sums in O(n) using that eta1 only sees |x|, |y|: rows half+m
// and half-m are identical.  For radius r = m*h,
//   sum = e^{lambda r} * (outer weights) - e^{-lambda r} * (inner weights)
// with outer = points of radius > r and inner = radius < r; the two mirror
// points at radius r drop out.  Prefix/suffix sums over e^{+-lambda x}phi
// cover every radius at once.
void apply_kernel(const std::vector<double>& xs, double lambda,
                  const std::vector<complexd>& phi,
                  std::vector<complexd>& out) {
    const std::size_t n = xs.size();
    const std::size_t half = n / 2;
    std::vector<complexd> pre_up(n + 1), pre_um(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        pre_up[j + 1] = pre_up[j] + std::exp(lambda * xs[j]) * phi[j];
        pre_um[j + 1] = pre_um[j] + std::exp(-lambda * xs[j]) * phi[j];
    }
    std::vector<complexd> suf_um(n + 1);
    for (std::size_t j = n; j-- > 0;)
        suf_um[j] = suf_um[j + 1] + std::exp(-lambda * xs[j]) * phi[j];

    const complexd scale = kI * lambda * 0.5;
    out[half] = scale * (pre_up[half] + suf_um[half + 1]);
    for (std::size_t m = 1; m <= half; ++m) {
        const double r = xs[half + m];
        const complexd outer = pre_up[half - m] + suf_um[half + m + 1];
        const complexd inner = (pre_um[half] - pre_um[half - m + 1]) +
                               (pre_up[half + m] - pre_up[half + 1]) +
                               phi[half];
        const complexd row =
            scale * (std::exp(lambda * r) * outer - std::exp(-lambda * r) * inner);
        out[half + m] = row;
        out[half - m] = row;
    }
}

std::vector<complexd> gaussian_probe(const std::vector<double>& xs, double h,
                                     double center, double momentum,
                                     double width) {
    std::vector<complexd> phi(xs.size());
    double norm2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double u = (xs[i] - center) / width;
        phi[i] = std::exp(complexd{-0.5 * u * u, momentum * xs[i]});
        norm2 += std::norm(phi[i]);
    }
    const double inv = 1.0 / std::sqrt(h * norm2);
    for (auto& v : phi) v *= inv;
    return phi;
}

complexd grid_inner(double h, const std::vector<complexd>& a,
                    const std::vector<complexd>& b) {
    complexd acc{0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return h * acc;
}

} // namespace

double intertwining_residual(double grid_spacing, double domain_half_width,
                             double delta_width, const SingleDeltaParams& p) {
    check_params(p);
    const double lam = p.lambda;
    if (!(std::isfinite(grid_spacing) && grid_spacing > 0.0) ||
        !(std::isfinite(domain_half_width) && domain_half_width > 0.0) ||
        !(std::isfinite(delta_width) && delta_width > 0.0))
        throw ResolutionError("intertwining check: all lengths must be finite and > 0");
    if (grid_spacing > 0.5 * delta_width)
        throw ResolutionError("intertwining check: need grid_spacing <= delta_width/2");
    if (delta_width > 0.2 / lam)
        throw ResolutionError("intertwining check: need delta_width <= 0.2/lambda");
    if (domain_half_width < 4.0 / lam)
        throw ResolutionError("intertwining check: need domain_half_width >= 4/lambda");
    const double half_f = std::round(domain_half_width / grid_spacing);
    if (!(half_f >= 1.0 && half_f <= 5e7))
        throw ResolutionError("intertwining check: grid size out of range");

    const std::size_t half = static_cast<std::size_t>(half_f);
    const std::size_t n = 2 * half + 1;
    const double h = grid_spacing;

    // Symmetric grid built from integer offsets so x[half+m] == -x[half-m]
    // holds bitwise; the kernel's radius bookkeeping depends on it.
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = (static_cast<double>(i) - static_cast<double>(half)) * h;

    constexpr double two_pi = 6.283185307179586;
    const complexd z = p.z();
    const double gnorm = 1.0 / (delta_width * std::sqrt(two_pi));
    std::vector<complexd> diag(n), diag_conj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = xs[i] / delta_width;
        diag[i] = z * (gnorm * std::exp(-0.5 * u * u));
        diag_conj[i] = std::conj(diag[i]);
    }

    const double k = p.q() * lam;
    const double sigma = 0.8 / lam;
    const double probe_spots[8][2] = {
        {0.0, 0.0},          {0.0, k},           {0.0, -k},
        {-0.7 / lam, k},     {0.7 / lam, -k},    {-1.5 / lam, 0.0},
        {1.5 / lam, 0.0},    {0.35 / lam, 2.0 * k}};

    std::vector<std::vector<complexd>> probes;
    probes.reserve(8);
    for (const auto& spot : probe_spots)
        probes.push_back(gaussian_probe(xs, h, spot[0], spot[1], sigma));

    const double eps = p.epsilon;
    std::vector<complexd> kphi(n), work(n), hphi(n), khphi(n);
    std::vector<std::vector<complexd>> defects, kernel_images;
    for (const auto& b : probes) {
        apply_kernel(xs, lam, b, kphi);

        std::vector<complexd> ktil(n);
        for (std::size_t i = 0; i < n; ++i) ktil[i] = h * kphi[i];
        kernel_images.push_back(std::move(ktil));

        // H^dag (M b) with M = 1 + eps h K ...
        for (std::size_t i = 0; i < n; ++i) work[i] = b[i] + eps * h * kphi[i];
        std::vector<complexd> defect(n);
        apply_hamiltonian(diag_conj, work, h, defect);

        // ... minus M (H b)
        apply_hamiltonian(diag, b, h, hphi);
        apply_kernel(xs, lam, hphi, khphi);
        for (std::size_t i = 0; i < n; ++i)
            defect[i] -= hphi[i] + eps * h * khphi[i];
        defects.push_back(std::move(defect));
    }

    double num = 0.0, den = 0.0;
    for (const auto& a : probes) {
        for (std::size_t b = 0; b < probes.size(); ++b) {
            num = std::max(num, std::abs(grid_inner(h, a, defects[b])));
            den = std::max(den, std::abs(grid_inner(h, a, kernel_images[b])));
        }
    }
    return num / den;
}

} // namespace qhs
