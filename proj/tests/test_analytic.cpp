#include <doctest.h>

#include <cmath>

#include "qhscatter/analytic.hpp"
#include "qhscatter/errors.hpp"

using namespace qhs;

TEST_CASE("two-delta amplitudes: transparency limits") {
    // vanishing spikes
    const auto weak = two_delta_amplitudes({1e-12, 1.0, 1.0});
    CHECK(std::abs(weak.trans - 1.0) < 1e-11);
    CHECK(std::abs(weak.refl) < 1e-11);

    // sin(2ka) = 0 forces D = 1, C = 0 for any strength
    const double k = 1.3;
    const double pi = std::acos(-1.0);
    const auto node = two_delta_amplitudes({2.0, pi / (2.0 * k), k});
    CHECK(std::abs(node.trans - 1.0) < 1e-12);
    CHECK(std::abs(node.refl) < 1e-12);
}

TEST_CASE("two-delta at lambda = a = k = 1") {
    const TwoDeltaParams p{1.0, 1.0, 1.0};
    CHECK(p.alpha() == 0.5);
    const auto amp = two_delta_amplitudes(p);
    // |D|^2 = 1/(1 - 4 a^2 (1-a^2) sin^2 2) at a = 1/2
    const double s2 = std::pow(std::sin(2.0), 2);
    const double t_expect = 1.0 / (1.0 - 0.75 * s2);
    CHECK(std::norm(amp.trans) == doctest::Approx(t_expect).epsilon(1e-12));
    CHECK(std::norm(amp.trans) == doctest::Approx(2.63238).epsilon(1e-5));
    CHECK(two_delta_total(p) == doctest::Approx(3.17651).epsilon(1e-5));
}

TEST_CASE("two-delta total equals |C|^2 + |D|^2 across the grid") {
    for (double lambda = 0.2; lambda <= 2.01; lambda += 0.3)
        for (double a = 0.25; a <= 2.01; a += 0.25)
            for (double ka = 0.1; ka <= 3.01; ka += 0.29) {
                const double k = ka / a;
                const TwoDeltaParams p{lambda, a, k};
                const auto amp = two_delta_amplitudes(p);
                const double direct = std::norm(amp.refl) + std::norm(amp.trans);
                CHECK(two_delta_total(p) ==
                      doctest::Approx(direct).epsilon(1e-12));
            }
}

TEST_CASE("two-delta total exceeds 1 whenever alpha < 1 and the sine is live") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99})
        for (double ka : {0.3, 0.8, 1.3, 2.2, 2.9}) {
            const double k = 1.0, a = ka;
            const TwoDeltaParams p{2.0 * alpha * k, a, k};
            CHECK(two_delta_total(p) > 1.0);
        }
}

TEST_CASE("single-delta amplitudes: reference points") {
    // Hermitian case, q = 1: D = 1/(1+i)
    const auto herm = single_delta_amplitudes({1.0, 0.0, 1.0});
    CHECK(std::norm(herm.trans) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::norm(herm.refl) == doctest::Approx(0.5).epsilon(1e-14));

    // eps = 0.1, q = 1: |D|^2 = 1/1.81, |C|^2 = 1.01/1.81
    const auto amp = single_delta_amplitudes({1.0, 0.1, 1.0});
    CHECK(std::norm(amp.trans) == doctest::Approx(1.0 / 1.81).epsilon(1e-13));
    CHECK(std::norm(amp.refl) == doctest::Approx(1.01 / 1.81).epsilon(1e-13));

    // vanishing strength via q -> large: D -> 1
    const auto weak = single_delta_amplitudes({1e-10, 0.2, 1.0});
    CHECK(std::abs(weak.trans - 1.0) < 1e-9);
    CHECK(std::abs(weak.refl) < 1e-9);
}

TEST_CASE("single-delta totals and the sign property") {
    const SingleDeltaParams gain{1.0, 0.1, 1.0};
    CHECK(single_delta_total(gain) == doctest::Approx(1.110497).epsilon(1e-6));

    // eps = -0.1, q = 1: direct evaluation of the reciprocal form
    const SingleDeltaParams loss{1.0, -0.1, 1.0};
    CHECK(single_delta_total(loss) ==
          doctest::Approx(0.9095022624434389).epsilon(1e-14));
    CHECK(single_delta_total(loss) < 1.0);

    CHECK(single_delta_total({1.0, 0.0, 0.7}) == 1.0);

    for (double eps = -0.5; eps <= 0.501; eps += 0.125)
        for (double q = 0.2; q <= 5.01; q += 0.4) {
            const SingleDeltaParams p{1.0, eps, q};
            const double total = single_delta_total(p);
            if (eps > 0.0) CHECK(total > 1.0);
            if (eps < 0.0) CHECK(total < 1.0);
            if (eps == 0.0) CHECK(total == 1.0);
        }
}

TEST_CASE("single-delta total equals |C|^2 + |D|^2 across the grid") {
    for (double eps = -0.5; eps <= 0.501; eps += 0.1)
        for (double q = 0.2; q <= 5.01; q += 0.3) {
            const SingleDeltaParams p{1.7, eps, 1.7 * q};
            const auto amp = single_delta_amplitudes(p);
            const double direct = std::norm(amp.refl) + std::norm(amp.trans);
            CHECK(single_delta_total(p) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
}

TEST_CASE("parameter structs expose the derived quantities") {
    const TwoDeltaParams td{3.0, 0.5, 1.5};
    CHECK(td.alpha() == 1.0);
    const SingleDeltaParams sd{2.0, 0.25, 5.0};
    CHECK(sd.q() == 2.5);
    CHECK(sd.z() == complexd{4.0, 1.0});
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(two_delta_amplitudes({-1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(two_delta_amplitudes({1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(two_delta_total({1.0, 1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(single_delta_amplitudes({0.0, 0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(single_delta_total({1.0, 0.1, 0.0}), std::invalid_argument);
}
