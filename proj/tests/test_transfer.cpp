#include <doctest.h>

#include <cmath>

#include "qhscatter/analytic.hpp"
#include "qhscatter/errors.hpp"
#include "qhscatter/transfer.hpp"

using namespace qhs;

namespace {

double rel_dev(complexd a, complexd b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

Potential1D two_delta_potential(double lambda, double a) {
    return Potential1D::build(
        {{-a, complexd{0.0, -lambda}}, {a, complexd{0.0, lambda}}}, {});
}

} // namespace

TEST_CASE("delta interface matrix: identity at z = 0, determinant always 1") {
    const auto id = delta_interface_matrix(1.7, complexd{0.0, 0.0});
    CHECK(id.m11 == complexd{1.0, 0.0});
    CHECK(id.m12 == complexd{0.0, 0.0});
    CHECK(id.m21 == complexd{0.0, 0.0});
    CHECK(id.m22 == complexd{1.0, 0.0});

    for (double k : {0.3, 1.0, 2.5})
        for (double re : {-2.0, 0.0, 1.5})
            for (double im : {-1.0, 0.0, 3.0}) {
                const auto m = delta_interface_matrix(k, complexd{re, im});
                CHECK(std::abs(m.det() - 1.0) < 1e-13);
            }
}

TEST_CASE("single real spike transmission from the interface matrix") {
    // |D|^2 = 1/(1 + (z/2k)^2) for real z, from solving the two matching
    // equations directly
    for (double z : {0.5, 1.0, 3.0})
        for (double k : {0.4, 1.0, 2.0}) {
            const auto pot = Potential1D::build({{0.0, complexd{z, 0.0}}}, {});
            const auto amp = scattering_coefficients(pot, k);
            const double w = z / (2.0 * k);
            CHECK(std::norm(amp.trans) ==
                  doctest::Approx(1.0 / (1.0 + w * w)).epsilon(1e-12));
        }
}

TEST_CASE("complex spike reproduces D = 1/(0.9 + i) at eps = 0.1, k = lambda") {
    const double lambda = 1.4;
    const auto pot = Potential1D::build(
        {{0.0, 2.0 * lambda * complexd{1.0, 0.1}}}, {});
    const auto amp = scattering_coefficients(pot, lambda);
    const complexd expect = 1.0 / complexd{0.9, 1.0};
    CHECK(rel_dev(amp.trans, expect) < 1e-13);
    CHECK(std::norm(amp.trans) == doctest::Approx(1.0 / 1.81).epsilon(1e-12));
}

TEST_CASE("segment propagation: free stretch is a pure phase") {
    const double k = 1.3, L = 2.0;
    const auto m = segment_propagation_matrix(k, complexd{0.0, 0.0}, L);
    CHECK(std::abs(m.m11 - std::exp(complexd{0.0, k * L})) < 1e-14);
    CHECK(std::abs(m.m22 - std::exp(complexd{0.0, -k * L})) < 1e-14);
    CHECK(std::abs(m.m12) < 1e-15);
    CHECK(std::abs(m.m21) < 1e-15);
}

TEST_CASE("segment propagation: degenerate branch is reported, not guessed") {
    CHECK_THROWS_AS(segment_propagation_matrix(1.0, complexd{1.0, 0.0}, 1.0),
                    DegenerateBranchError);
    CHECK_NOTHROW(segment_propagation_matrix(1.0 + 1e-12, complexd{1.0, 0.0}, 1.0));
}

TEST_CASE("segment propagation matches the composed interface walk") {
    // a single real segment must behave unitarily
    for (double k : {0.6, 1.1, 2.3})
        for (double v : {-1.5, -0.4, 0.8}) {
            const auto pot = Potential1D::build({}, {{-0.7, 0.9, complexd{v, 0.0}}});
            const auto sum = probability_summary(scattering_coefficients(pot, k));
            CHECK(std::abs(sum.total - 1.0) < 1e-12);
        }
}

TEST_CASE("empty potential scatters trivially") {
    const auto amp = scattering_coefficients(Potential1D{}, 0.8);
    CHECK(amp.refl == complexd{0.0, 0.0});
    CHECK(amp.trans == complexd{1.0, 0.0});
    const auto sum = probability_summary(amp);
    CHECK(sum.R == 0.0);
    CHECK(sum.T == 1.0);
    CHECK(sum.total == 1.0);
}

TEST_CASE("two-delta model against the closed forms, 125-point grid") {
    double worst = 0.0;
    for (double lambda : {0.25, 0.6, 1.0, 1.4, 2.0})
        for (double a : {0.4, 0.8, 1.2, 1.6, 2.0})
            for (double ka : {0.35, 1.0, 1.6, 2.2, 2.9}) {
                const double k = ka / a;
                const auto closed = two_delta_amplitudes({lambda, a, k});
                const auto brute =
                    scattering_coefficients(two_delta_potential(lambda, a), k);
                worst = std::max({worst, rel_dev(closed.refl, brute.refl),
                                  rel_dev(closed.trans, brute.trans)});
            }
    CHECK(worst < 1e-10);
}

TEST_CASE("single-delta model against the closed forms, 168-point grid") {
    double worst = 0.0;
    for (double eps : {-0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.0})
        for (double q : {0.2, 0.5, 1.0, 1.7, 2.6, 3.8, 4.4, 5.0})
            for (double lambda : {0.7, 1.0, 2.2}) {
                const SingleDeltaParams p{lambda, eps, q * lambda};
                const auto closed = single_delta_amplitudes(p);
                const auto pot = Potential1D::build({{0.0, p.z()}}, {});
                const auto brute = scattering_coefficients(pot, p.k);
                worst = std::max({worst, rel_dev(closed.refl, brute.refl),
                                  rel_dev(closed.trans, brute.trans)});
            }
    CHECK(worst < 1e-10);
}

TEST_CASE("hermitian potentials conserve probability over a k-grid") {
    const auto pot = Potential1D::build(
        {{-0.9, complexd{1.2, 0.0}}, {0.4, complexd{-0.7, 0.0}}},
        {{-0.4, 0.4, complexd{-1.1, 0.0}}});
    for (int i = 0; i < 120; ++i) {
        const double k = 0.15 + 0.05 * i;
        const auto sum = probability_summary(scattering_coefficients(pot, k));
        CHECK(std::abs(sum.total - 1.0) < 1e-12);
    }
}

TEST_CASE("splitting a segment changes nothing") {
    const complexd v{0.3, 0.8};
    const auto whole = Potential1D::build({}, {{-1.0, 1.0, v}});
    const auto split = Potential1D::build({}, {{-1.0, 0.2, v}, {0.2, 1.0, v}});
    const auto split3 = Potential1D::build(
        {}, {{-1.0, -0.5, v}, {-0.5, 0.7, v}, {0.7, 1.0, v}});
    for (double k : {0.35, 0.9, 1.8, 3.2}) {
        const auto a = scattering_coefficients(whole, k);
        const auto b = scattering_coefficients(split, k);
        const auto c = scattering_coefficients(split3, k);
        CHECK(std::abs(a.refl - b.refl) < 1e-12);
        CHECK(std::abs(a.trans - b.trans) < 1e-12);
        CHECK(std::abs(a.refl - c.refl) < 1e-12);
        CHECK(std::abs(a.trans - c.trans) < 1e-12);
    }
}

TEST_CASE("delta riding on a segment edge is handled as one interface") {
    // compare against the same physics expressed with a detached spike a
    // hair away: amplitudes must converge as the gap closes
    const complexd v{0.0, 0.9};
    const complexd z{1.1, 0.3};
    const auto fused = Potential1D::build({{1.0, z}}, {{-1.0, 1.0, v}});
    const double k = 1.2;
    const auto f = scattering_coefficients(fused, k);
    double prev = 1e9;
    for (double gap : {1e-3, 1e-5, 1e-7}) {
        const auto near = Potential1D::build({{1.0 + gap, z}}, {{-1.0, 1.0, v}});
        const auto n = scattering_coefficients(near, k);
        const double dev = std::abs(n.trans - f.trans) + std::abs(n.refl - f.refl);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("scattering_wave is continuous and matches the amplitudes") {
    const auto pot = Potential1D::build(
        {{0.5, complexd{0.8, -0.3}}}, {{-1.2, 0.4, complexd{-0.5, 0.25}}});
    const double k = 1.1;
    const auto amp = scattering_coefficients(pot, k);
    const auto wave = scattering_wave(pot, k);
    REQUIRE(wave.regions.size() == 4);

    // exterior regions carry the ansatz amplitudes
    CHECK(wave.regions.front().amp_right == complexd{1.0, 0.0});
    CHECK(std::abs(wave.regions.front().amp_left - amp.refl) < 1e-13);
    CHECK(std::abs(wave.regions.back().amp_right - amp.trans) < 1e-13);
    CHECK(std::abs(wave.regions.back().amp_left) < 1e-13);

    // continuity at the three breakpoints
    const complexd i{0.0, 1.0};
    for (std::size_t r = 0; r + 1 < wave.regions.size(); ++r) {
        const auto& a = wave.regions[r];
        const auto& b = wave.regions[r + 1];
        const double x = a.x_hi;
        CHECK(a.x_hi == b.x_lo);
        const complexd va = a.amp_right * std::exp(i * a.amp_wavenum_right * x) +
                            a.amp_left * std::exp(-i * a.amp_wavenum_left * x);
        const complexd vb = b.amp_right * std::exp(i * b.amp_wavenum_right * x) +
                            b.amp_left * std::exp(-i * b.amp_wavenum_left * x);
        CHECK(std::abs(va - vb) < 1e-12);
    }
}

TEST_CASE("spectral singularity is reported instead of returning infinities") {
    // For the two-delta model the composition denominator vanishes where
    // 1 + 2i a^2 e^{2ika} sin 2ka = 0, i.e. at sin 2ka = +-1 with
    // 2 a^2 = +-1: alpha = 1/sqrt(2), so lambda = 2k/sqrt(2) = k*sqrt(2)
    // with 2ka = pi/2.
    const double pi = std::acos(-1.0);
    const double a = 1.0;
    const double k = pi / (4.0 * a);
    const double lambda = k * std::sqrt(2.0);
    CHECK_THROWS_AS(
        scattering_coefficients(two_delta_potential(lambda, a), k),
        SingularCompositionError);
    CHECK_THROWS_AS(two_delta_amplitudes({lambda, a, k}),
                    SingularCompositionError);
}

TEST_CASE("arguments are validated") {
    CHECK_THROWS_AS(scattering_coefficients(Potential1D{}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(scattering_coefficients(Potential1D{}, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(delta_interface_matrix(0.0, complexd{1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(segment_propagation_matrix(1.0, complexd{0.0, 0.0}, 0.0),
                    std::invalid_argument);
}
