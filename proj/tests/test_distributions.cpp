#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "collspec/distributions.hpp"
#include "collspec/response.hpp"
#include "test_helpers.hpp"

using namespace collspec;
using namespace collspec::testing;

namespace {

DistributionSpec gaussian(DistributionSpec::Kind kind, double mean, double sigma,
                          int points = 64) {
    DistributionSpec d;
    d.kind = kind;
    d.mean = mean;
    d.sigma = sigma;
    d.points = points;
    return d;
}

Complex discrete_response(const EnsembleSpec& ens, double omega) {
    return layer_response(ens, omega).m00;
}

double discretization_error(DistributionSpec::Kind kind, double mean, double sigma, int points,
                            double omega_max) {
    const EnsembleSpec ens = discretize_distribution(gaussian(kind, mean, sigma, points));
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double w = -omega_max + 2.0 * omega_max * i / 400.0;
        const Complex closed = (kind == DistributionSpec::Kind::gaussian_isomer)
                                   ? gaussian_isomer_response(mean, sigma, w)
                                   : gaussian_magnetic_response(mean, sigma, w);
        worst = std::max(worst, rel_err(discrete_response(ens, w), closed));
    }
    return worst;
}

}  // namespace

TEST_CASE("gaussian_isomer_response values") {
    CHECK(rel_err(gaussian_isomer_response(0.0, 1e-6, 0.0), Complex{0.0, -1.0}) < 1e-9);

    // frozen against the quadrature oracle
    const Complex wide = gaussian_isomer_response(0.0, 10.0, 0.0);
    CHECK(doctest::Approx(wide.imag()).epsilon(1e-7) == -0.1159262410);
    CHECK(rel_err(wide, quadrature_response_oracle(gaussian(DistributionSpec::Kind::gaussian_isomer, 0.0, 10.0), 0.0)) < 1e-9);

    // symmetric about the mean
    const Complex at_mean = gaussian_isomer_response(5.0, 2.0, 5.0);
    CHECK(std::abs(at_mean.real()) < 1e-12);

    CHECK_THROWS_AS(gaussian_isomer_response(0.0, 0.0, 0.0), NumericError);
}

TEST_CASE("magnetic_doublet_response values") {
    CHECK(rel_err(magnetic_doublet_response(0.0, 0.0), Complex{0.0, -2.0}) < 1e-15);
    CHECK(rel_err(magnetic_doublet_response(1.0, 0.0), Complex{0.0, -1.0}) < 1e-15);

    // exact rational arithmetic at (phi, omega) = (17, 17)
    const Complex u{17.0, 1.0};
    const Complex want = 2.0 * u / (u * u - 289.0);
    CHECK(rel_err(magnetic_doublet_response(17.0, 17.0), want) < 1e-15);
    CHECK(doctest::Approx(magnetic_doublet_response(17.0, 17.0).real()).epsilon(1e-9) ==
          0.029386343993);
}

TEST_CASE("gaussian_magnetic_response values and the washed-out dip") {
    // sigma -> 0 collapses to the phi = 0 doublet
    CHECK(rel_err(gaussian_magnetic_response(0.0, 1e-6, 0.0), Complex{0.0, -2.0}) < 1e-9);

    const Complex center = gaussian_magnetic_response(17.0, 3.5, 0.0);
    CHECK(std::abs(center.real()) < 1e-12);
    CHECK(rel_err(center, quadrature_response_oracle(
                              gaussian(DistributionSpec::Kind::gaussian_magnetic, 17.0, 3.5), 0.0)) <
          1e-8);

    // widening the splitting distribution fills the central dip of |F|
    const Complex wide = gaussian_magnetic_response(17.0, 14.0, 0.0);
    CHECK(std::abs(wide) > std::abs(center));

    CHECK_THROWS_AS(gaussian_magnetic_response(17.0, 0.0, 0.0), NumericError);
}

TEST_CASE("oracle equivalence of the closed forms") {
    for (const double sigma : {0.5, 3.5, 10.0, 14.0}) {
        for (const double mean : {0.0, 17.0}) {
            const auto iso = gaussian(DistributionSpec::Kind::gaussian_isomer, mean, sigma);
            const auto mag = gaussian(DistributionSpec::Kind::gaussian_magnetic, mean, sigma);
            for (int i = 0; i <= 60; ++i) {
                const double w = -60.0 + 2.0 * i;
                CHECK(rel_err(gaussian_isomer_response(mean, sigma, w),
                              quadrature_response_oracle(iso, w)) < 1e-8);
                CHECK(rel_err(gaussian_magnetic_response(mean, sigma, w),
                              quadrature_response_oracle(mag, w)) < 1e-8);
            }
        }
    }
}

TEST_CASE("quadrature oracle edge cases") {
    // nearly degenerate Gaussian against the pure Lorentzian
    const auto narrow = gaussian(DistributionSpec::Kind::gaussian_isomer, 0.0, 1e-3);
    for (double w : {-20.0, -1.0, 0.0, 0.7, 30.0}) {
        const Complex lorentz = 1.0 / Complex{w, 1.0};
        CHECK(rel_err(quadrature_response_oracle(narrow, w), lorentz) < 1e-5);
    }

    // symmetric integrand at omega = mean has vanishing real part
    const auto sym = gaussian(DistributionSpec::Kind::gaussian_isomer, 4.0, 2.5);
    CHECK(std::abs(quadrature_response_oracle(sym, 4.0).real()) < 1e-12);

    DistributionSpec discrete;
    discrete.kind = DistributionSpec::Kind::discrete_list;
    discrete.values = {-1.0, 1.0};
    discrete.weights = {0.5, 0.5};
    CHECK_THROWS_AS(quadrature_response_oracle(discrete, 0.0), ConfigError);
}

TEST_CASE("gauss_hermite rule sanity") {
    for (int n : {1, 2, 7, 64, 200, 512}) {
        const GaussHermiteRule rule = gauss_hermite(n);
        double sw = 0.0, m2 = 0.0;
        for (int i = 0; i < n; ++i) {
            sw += rule.weights[i];
            m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
        }
        CHECK(rel_err(sw, std::sqrt(M_PI)) < 1e-12);
        if (n >= 2) CHECK(rel_err(m2, 0.5 * std::sqrt(M_PI)) < 1e-11);
        for (int i = 1; i < n; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK_THROWS_AS(gauss_hermite(0), ConfigError);
    CHECK_THROWS_AS(gauss_hermite(513), ConfigError);
}

TEST_CASE("discretize_distribution structure") {
    // points = 1 collapses to a single sub-ensemble at the mean
    const EnsembleSpec one =
        discretize_distribution(gaussian(DistributionSpec::Kind::gaussian_isomer, 3.0, 2.0, 1));
    REQUIRE(one.sub_ensembles.size() == 1);
    CHECK(one.sub_ensembles[0].weight == 1.0);
    CHECK(one.sub_ensembles[0].transitions[0].detuning == -3.0);

    // discrete_list maps verbatim
    DistributionSpec discrete;
    discrete.kind = DistributionSpec::Kind::discrete_list;
    discrete.values = {-1.0, 1.0};
    discrete.weights = {0.5, 0.5};
    const EnsembleSpec two = discretize_distribution(discrete);
    REQUIRE(two.sub_ensembles.size() == 2);
    CHECK(two.sub_ensembles[0].transitions[0].detuning == -1.0);
    CHECK(two.sub_ensembles[1].transitions[0].detuning == 1.0);

    // magnetic nodes come in +-phi transition pairs
    const EnsembleSpec mag = discretize_distribution(
        gaussian(DistributionSpec::Kind::gaussian_magnetic, 17.0, 3.5, 16));
    for (const auto& sub : mag.sub_ensembles) {
        REQUIRE(sub.transitions.size() == 2);
        CHECK(sub.transitions[0].detuning == -sub.transitions[1].detuning);
    }

    // weights sum to exactly one after renormalization
    for (int points : {8, 64, 512}) {
        const EnsembleSpec ens = discretize_distribution(
            gaussian(DistributionSpec::Kind::gaussian_isomer, 0.0, 5.0, points));
        double sum = 0.0;
        for (const auto& sub : ens.sub_ensembles) sum += sub.weight;
        CHECK(sum == 1.0);
    }
}

TEST_CASE("discretization converges monotonically; narrow widths reach 1e-6 at P=64") {
    // The reachable accuracy at fixed P degrades exponentially with the node
    // spacing in units of the linewidth (the sum of unit-width Lorentzians
    // cannot resolve finer than its comb spacing), so only sigma below ~1
    // attains 1e-6 with 64 nodes.  Wider presets still converge monotonically.
    for (const double sigma : {0.5, 3.5, 10.0, 14.0}) {
        double prev = 1e300;
        for (const int points : {8, 16, 32, 64}) {
            const double err = discretization_error(DistributionSpec::Kind::gaussian_isomer, 0.0,
                                                    sigma, points, 100.0);
            CAPTURE(sigma);
            CAPTURE(points);
            CHECK(err < prev);
            prev = err;
        }
    }
    CHECK(discretization_error(DistributionSpec::Kind::gaussian_isomer, 0.0, 0.5, 64, 100.0) <
          1e-6);
    CHECK(discretization_error(DistributionSpec::Kind::gaussian_isomer, 5.0, 0.5, 64, 100.0) <
          1e-6);
    CHECK(discretization_error(DistributionSpec::Kind::gaussian_magnetic, 17.0, 0.5, 64, 60.0) <
          2e-6);
}

TEST_CASE("mean-symmetric doublet responses obey F(-w) = -conj(F(w))") {
    // the exact reflection identity of a passive response whose poles come in
    // +-phi pairs; it makes |F| (and |chi|^2 downstream) even in omega
    for (double sigma : {1.0, 3.5, 14.0}) {
        for (double w : {0.3, 2.0, 11.0, 40.0}) {
            const Complex plus = gaussian_magnetic_response(17.0, sigma, w);
            const Complex minus = gaussian_magnetic_response(17.0, sigma, -w);
            CHECK(rel_err(minus, -std::conj(plus)) < 1e-12);
            CHECK(rel_err(std::abs(minus), std::abs(plus)) < 1e-12);
        }
    }
}
