#include "qhscatter/analytic.hpp"
#include "qhscatter/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qhs {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void check_two_delta(const TwoDeltaParams& p) {
    if (!(std::isfinite(p.lambda) && p.lambda > 0.0))
        throw std::invalid_argument("two-delta: lambda must be finite and > 0");
    if (!(std::isfinite(p.a) && p.a > 0.0))
        throw std::invalid_argument("two-delta: a must be finite and > 0");
    if (!(std::isfinite(p.k) && p.k > 0.0))
        throw std::invalid_argument("two-delta: k must be finite and > 0");
}

void check_single_delta(const SingleDeltaParams& p) {
    if (!(std::isfinite(p.lambda) && p.lambda > 0.0))
        throw std::invalid_argument("single-delta: lambda must be finite and > 0");
    if (!std::isfinite(p.epsilon))
        throw std::invalid_argument("single-delta: epsilon must be finite");
    if (!(std::isfinite(p.k) && p.k > 0.0))
        throw std::invalid_argument("single-delta: k must be finite and > 0");
}

} // namespace

ScatteringAmplitudes two_delta_amplitudes(const TwoDeltaParams& p) {
    check_two_delta(p);
    const double al = p.alpha();
    const double s = std::sin(2.0 * p.k * p.a);
    const complexd phase = std::exp(2.0 * kI * p.k * p.a);
    const complexd denom = 1.0 + 2.0 * kI * al * al * phase * s;
    if (std::abs(denom) < 1e-14)
        throw SingularCompositionError("two-delta amplitude denominator vanished");
    const complexd D = 1.0 / denom;
    const complexd C = 2.0 * kI * D * al * (1.0 - al) * s;
    return {p.k, C, D};
}

double two_delta_total(const TwoDeltaParams& p) {
    check_two_delta(p);
    const double al = p.alpha();
    const double s2 = std::pow(std::sin(2.0 * p.k * p.a), 2);
    const double num = 1.0 + 4.0 * al * al * (1.0 - al) * (1.0 - al) * s2;
    const double denom = 1.0 - 4.0 * al * al * (1.0 - al * al) * s2;
    if (std::abs(denom) < 1e-14)
        throw SingularCompositionError("two-delta total-probability denominator vanished");
    return num / denom;
}

ScatteringAmplitudes single_delta_amplitudes(const SingleDeltaParams& p) {
    check_single_delta(p);
    const complexd w = kI * p.z() / (2.0 * p.k);
    const complexd denom = 1.0 + w;
    if (std::abs(denom) < 1e-14)
        throw SingularCompositionError("single-delta amplitude denominator vanished");
    const complexd D = 1.0 / denom;
    const complexd C = -w * D;
    return {p.k, C, D};
}

double single_delta_total(const SingleDeltaParams& p) {
    check_single_delta(p);
    const double q = p.q();
    const double e = p.epsilon;
    const double denom = 1.0 - 2.0 * e * q / (1.0 + e * e + q * q);
    if (std::abs(denom) < 1e-14)
        throw SingularCompositionError("single-delta total-probability denominator vanished");
    return 1.0 / denom;
}

} // namespace qhs
