#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liouspace/errors.hpp"
#include "liouspace/phase_flow.hpp"
#include "liouspace/reference.hpp"

using namespace liouspace;

TEST_SUITE("phase_flow") {

TEST_CASE("flow moves points along parabolas") {
    const PhasePoint a = flow_forward({1.0, 2.0}, 3.0);
    CHECK(a.q == 1.0 + 6.0 - 4.5);
    CHECK(a.p == -1.0);
    const PhasePoint b = flow_backward(a, 3.0);
    CHECK(b.q == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.p == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("energy is conserved along the flow") {
    for (const PhasePoint pt : {PhasePoint{0.0, 0.0}, PhasePoint{-1.3, 0.4},
                                PhasePoint{2.0, -3.0}})
        for (const double t : {-2.0, 0.1, 1.0, 5.5}) {
            const double h0 = hamiltonian(pt);
            CHECK(hamiltonian(flow_forward(pt, t)) == doctest::Approx(h0).epsilon(1e-13));
        }
}

TEST_CASE("flow matrix is shear with unit determinant") {
    for (const double t : {0.0, 0.5, -3.0, 12.0}) {
        const TransformMatrix m = flow_matrix(t);
        CHECK(m.qq == 1.0);
        CHECK(m.qp == t);
        CHECK(m.pq == 0.0);
        CHECK(m.pp == 1.0);
        CHECK(m.det() == 1.0);
    }
}

TEST_CASE("Gaussian second moments under the shear") {
    const GaussianPhaseState g0{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    const GaussianPhaseState g2 = evolve_gaussian(g0, 2.0);
    CHECK(g2.mean.q == -2.0);
    CHECK(g2.mean.p == -2.0);
    CHECK(g2.cov.qq == 2.5);
    CHECK(g2.cov.qp == 1.0);
    CHECK(g2.cov.pp == 0.5);
    CHECK(g2.cov.det() == 0.25); // area preserved exactly here

    const GaussianPhaseState g{{0.3, -0.7}, {0.9, -0.2, 0.6}};
    const GaussianPhaseState gt = evolve_gaussian(g, 1.7);
    CHECK(gt.cov.det() == doctest::Approx(g.cov.det()).epsilon(1e-14));
    CHECK(gt.cov.positive_definite());
}

TEST_CASE("invalid covariance is rejected") {
    const GaussianPhaseState bad{{0.0, 0.0}, {1.0, 2.0, 1.0}}; // det < 0
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    CHECK_THROWS_AS(evolve_gaussian(bad, 1.0), ValidationError);
    CHECK_THROWS_AS(gaussian_density(bad, {0.0, 0.0}), ValidationError);
}

TEST_CASE("gaussian_density normalization and peak value") {
    const GaussianPhaseState g{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    CHECK(gaussian_density(g, {0.0, 0.0}) ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    // f = (1/pi) exp(-q^2 - p^2)
    CHECK(gaussian_density(g, {0.3, -0.4}) ==
          doctest::Approx(std::exp(-0.25) / std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("pullback propagation equals the evolved closed form") {
    const GaussianPhaseState g0{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    const double t = 1.0;
    const auto f0 = [g0](double q, double p) { return gaussian_density(g0, {q, p}); };
    const UniformGrid1D qg = make_grid(-4.0, 4.0, 33);
    const UniformGrid1D pg = make_grid(-5.0, 3.0, 33);
    const PhaseSpaceField f = propagate_distribution(f0, t, qg, pg);
    CHECK(f.time == t);
    CHECK_FALSE(f.classical);
    const GaussianPhaseState gt = evolve_gaussian(g0, t);
    for (std::size_t i = 0; i < qg.n; i += 4)
        for (std::size_t j = 0; j < pg.n; j += 4)
            CHECK(f.at(i, j) == doctest::Approx(gaussian_density(
                                    gt, {qg.point(i), pg.point(j)}))
                                    .epsilon(1e-14));
}

TEST_CASE("liouville residual of a time-frozen state") {
    // f held fixed at the t=0 Gaussian regardless of t: the stencil measures
    // p df/dq - df/dp = -2pq f + 2p f = 2 p f (1 - q).
    const PhaseSpaceTimeFn frozen = [](double q, double p, double) {
        return std::exp(-q * q - p * p) / std::numbers::pi;
    };
    const double h = 1e-4;
    const double at_half =
        2.0 * 1.0 * (std::exp(-0.25 - 1.0) / std::numbers::pi) * (1.0 - 0.5);
    CHECK(at_half == doctest::Approx(0.091197309279677178).epsilon(1e-15));
    CHECK(liouville_residual(frozen, {0.5, 1.0}, 0.0, h) ==
          doctest::Approx(at_half).epsilon(1e-7));
    // the q = 1 line is stationary for this profile
    CHECK(std::abs(liouville_residual(frozen, {1.0, 1.0}, 0.0, h)) < 1e-8);
}

TEST_CASE("liouville residual vanishes on the transported solution") {
    const GaussianPhaseState g0{{0.2, -0.1}, {0.7, 0.2, 0.55}};
    const PhaseSpaceTimeFn f = [g0](double q, double p, double t) {
        return gaussian_density(evolve_gaussian(g0, t), {q, p});
    };
    CHECK(std::abs(liouville_residual(f, {0.7, -0.3}, 0.8, 1e-3)) < 1e-6);
    CHECK_THROWS_AS(liouville_residual(f, {0.0, 0.0}, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(liouville_residual(f, {0.0, 0.0}, 0.0, -0.1), ValidationError);
}

} // TEST_SUITE
