#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "liouspace/errors.hpp"
#include "liouspace/oracles.hpp"
#include "liouspace/schrodinger_like.hpp"

using namespace liouspace;

namespace {

constexpr double kPi = std::numbers::pi;

double quadrature_norm(const WaveSpaceTimeFn& psi, double t, const UniformGrid1D& g) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g.n; ++k)
        acc += trapezoid_weight(g, k) * std::norm(psi(g.point(k), t));
    return std::sqrt(acc);
}

} // namespace

TEST_SUITE("schrodinger") {

TEST_CASE("raw wave function: frozen values and unit norm at all times") {
    CHECK(psi_gaussian_raw(0.0, 0.0).real() ==
          doctest::Approx(0.75112554446494251).epsilon(1e-15)); // pi^{-1/4}
    CHECK(psi_gaussian_raw(0.0, 0.0).imag() == 0.0);
    // the packet drifts to x = -t^2/2, so t = 4 would outrun this window
    const UniformGrid1D g = make_grid(-14.0, 14.0, 2001);
    for (double t : {0.0, 0.5, 2.0})
        CHECK(quadrature_norm([](double x, double tt) { return psi_gaussian_raw(x, tt); },
                              t, g) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("constant-term variant: agrees at t in {0,1}, loses normalization at t=2") {
    for (double t : {0.0, 1.0})
        for (double x : {-1.5, 0.0, 0.3, 2.0}) {
            CHECK(psi_gaussian_raw_t2(x, t) == psi_gaussian_raw(x, t));
        }
    const UniformGrid1D g = make_grid(-14.0, 14.0, 2001);
    const double n2 = quadrature_norm(
        [](double x, double t) { return psi_gaussian_raw_t2(x, t); }, 2.0, g);
    CHECK(n2 * n2 == doctest::Approx(1.8221188003905089).epsilon(1e-9)); // e^{3/5}
}

TEST_CASE("residual coefficient and phase rhs") {
    CHECK(residual_coefficient(0.0) == 0.5);
    CHECK(residual_coefficient(1.0) == 0.5);
    CHECK(phase_rhs(0.5) == -0.49625000000000002);
    CHECK(phase_rhs(2.0) == -0.74);
    for (double t : {-1.3, 0.0, 0.25, 1.0, 3.7})
        CHECK(residual_coefficient(t) + phase_rhs(t) == 0.0);
}

TEST_CASE("closed-form phase antiderivative") {
    CHECK(phase_closed(0.0) == 0.0);
    CHECK(phase_closed(1.0) ==
          doctest::Approx(-0.49686574836539082).epsilon(5e-16)); // -5/48 - pi/8
    CHECK(phase_closed(5.0) == doctest::Approx(-6.4959952552673794).epsilon(1e-14));
    // derivative matches phase_rhs
    const double h = 1e-5;
    for (double t : {0.3, 1.0, 2.5})
        CHECK((phase_closed(t + h) - phase_closed(t - h)) / (2.0 * h) ==
              doctest::Approx(phase_rhs(t)).epsilon(1e-8));
}

TEST_CASE("phase integrator tracks the closed form on knots and midpoints") {
    const GaugePhase tab = phase_integrate(2.0, 1e-3);
    CHECK(tab.kind == GaugePhase::Kind::ode_integrated);
    // the last knot lands on t_end up to the integrator's 1e-15 stop slack
    CHECK(tab.t_end() == doctest::Approx(2.0).epsilon(1e-14));
    REQUIRE(tab.knot_t.size() == tab.knot_phi.size());
    REQUIRE(tab.knot_t.size() > 2);
    for (std::size_t k = 0; k < tab.knot_t.size(); ++k)
        CHECK(std::abs(tab.knot_phi[k] - phase_closed(tab.knot_t[k])) < 1e-10);
    for (double t : {0.0005, 0.34117, 1.0, 1.77777, 1.99999})
        CHECK(std::abs(tab.value(t) - phase_closed(t)) < 1e-8);
    CHECK_THROWS_AS((void)tab.value(2.0000001), ValidationError);
    CHECK_THROWS_AS((void)tab.value(-0.1), ValidationError);
}

TEST_CASE("phase integrator handles negative end times") {
    const GaugePhase tab = phase_integrate(-1.5, 1e-3);
    REQUIRE(tab.knot_t.size() > 2);
    CHECK(tab.knot_t.front() < tab.knot_t.back()); // stored ascending
    CHECK(tab.knot_t.front() == doctest::Approx(-1.5).epsilon(1e-14));
    for (double t : {-1.4999, -1.2345, -0.5, 0.0})
        CHECK(std::abs(tab.value(t) - phase_closed(t)) < 1e-8);
    CHECK_THROWS_AS(phase_integrate(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(phase_integrate(1.0, -1e-3), ValidationError);
}

TEST_CASE("gauged wave function is the raw one rotated by the phase") {
    for (double t : {0.0, 0.7, 2.0})
        for (double x : {-2.0, 0.0, 1.3}) {
            const cplx expected =
                psi_gaussian_raw(x, t) * std::polar(1.0, phase_closed(t));
            CHECK(std::abs(psi_gaussian_gauged(x, t) - expected) < 1e-15);
        }
    GaugePhase closed;
    closed.kind = GaugePhase::Kind::closed_form;
    CHECK(psi_gaussian_gauged(0.4, 1.2, closed) == psi_gaussian_gauged(0.4, 1.2));
    const GaugePhase tab = phase_integrate(2.0, 1e-3);
    CHECK(std::abs(psi_gaussian_gauged(0.4, 1.2, tab) - psi_gaussian_gauged(0.4, 1.2)) <
          1e-8);
}

TEST_CASE("finite-difference residual vanishes only for the gauged solution") {
    const WaveSpaceTimeFn gauged = [](double x, double t) {
        return psi_gaussian_gauged(x, t);
    };
    const WaveSpaceTimeFn raw = [](double x, double t) {
        return psi_gaussian_raw(x, t);
    };
    const double hx = 1e-4, ht = 1e-4;
    for (double t : {0.3, 1.0, 2.0})
        for (double x : {-1.0, 0.0, 0.8}) {
            CHECK(std::abs(schrodinger_residual(gauged, x, t, hx, ht)) < 1e-6);
            // raw residual is -phase_rhs(t) * psi, a pure gauge term
            const cplx expected = -phase_rhs(t) * psi_gaussian_raw(x, t);
            CHECK(std::abs(schrodinger_residual(raw, x, t, hx, ht) - expected) < 1e-6);
        }
    CHECK_THROWS_AS(schrodinger_residual(raw, 0.0, 1.0, 0.0, 1e-4), ValidationError);
    CHECK_THROWS_AS(schrodinger_residual(raw, 0.0, 1.0, 1e-4, -1.0), ValidationError);
}

TEST_CASE("free-fall propagator: frozen value, modulus, singular limit") {
    const cplx g = greens(0.0, 0.0, 2.0);
    CHECK(std::abs(g) == doctest::Approx(0.28209479177387814).epsilon(1e-15));
    CHECK(std::arg(g) == doctest::Approx(-1.1187314967307815).epsilon(1e-15));
    for (double t : {0.01, 0.5, 3.0})
        CHECK(std::abs(greens(1.3, -0.4, t)) ==
              doctest::Approx(1.0 / std::sqrt(2.0 * kPi * t)).epsilon(1e-14));
    CHECK_THROWS_AS(greens(0.0, 0.0, 1e-4), ValidationError);
    CHECK_THROWS_AS(greens(0.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(greens(0.0, 0.0, -1.0), ValidationError);
}

TEST_CASE("pair kernel is independent of the propagator's constant phase") {
    const double t = 0.8;
    const cplx a = b_kernel(0.3, -0.2, 1.1, 0.4, t);
    const cplx b = b_kernel(0.3, -0.2, 1.1, 0.4, t, 0.37);
    CHECK(std::abs(a - b) < 1e-15);
    const cplx direct = greens(0.3, 1.1, t) * std::conj(greens(-0.2, 0.4, t));
    CHECK(std::abs(a - direct) < 1e-15);
}

TEST_CASE("propagate_psi reproduces the closed-form modulus") {
    const UniformGrid1D g = make_grid(-8.0, 8.0, 257);
    const WaveFunctionField psi0 = hermite_state(0, g);
    const WaveFunctionField psi = propagate_psi(psi0, 0.5, g);
    CHECK(psi.time == 0.5);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 0; i < g.n; i += 8)
        CHECK(std::abs(std::abs(psi.values[i]) -
                       std::abs(psi_gaussian_gauged(g.point(i), 0.5))) < 1e-6);
    // anchor is the modulus peak and was rotated to the positive real axis
    CHECK(psi.values[psi.gauge_anchor].imag() == 0.0);
    CHECK(psi.values[psi.gauge_anchor].real() > 0.0);
}

TEST_CASE("propagate_psi preconditions") {
    const UniformGrid1D wide = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D tight = make_grid(-2.0, 2.0, 65);

    WaveFunctionField undecayed;
    undecayed.xgrid = tight;
    undecayed.time = 0.0;
    undecayed.values.resize(tight.n);
    double acc = 0.0;
    for (std::size_t i = 0; i < tight.n; ++i) {
        const double x = tight.point(i);
        undecayed.values[i] = std::exp(-0.5 * x * x);
        acc += trapezoid_weight(tight, i) * std::norm(undecayed.values[i]);
    }
    for (auto& v : undecayed.values) v /= std::sqrt(acc);
    undecayed.gauge_anchor = argmax_abs(undecayed.values);
    CHECK_THROWS_WITH_AS(propagate_psi(undecayed, 1.0, wide),
                         doctest::Contains("not decayed"), ValidationError);

    const WaveFunctionField psi0 = hermite_state(0, wide);
    const UniformGrid1D coarse = make_grid(-8.0, 8.0, 33);
    const WaveFunctionField sparse = hermite_state(0, coarse);
    CHECK_THROWS_WITH_AS(propagate_psi(sparse, 0.1, coarse),
                         doctest::Contains("chirp"), ValidationError);
    CHECK_THROWS_AS(propagate_psi(psi0, 1e-4, wide), ValidationError);
}

TEST_CASE("hermite_state guards") {
    const UniformGrid1D g = make_grid(-8.0, 8.0, 257);
    CHECK_THROWS_AS(hermite_state(2, g), ValidationError);
    CHECK_THROWS_AS(hermite_state(-1, g), ValidationError);
    const UniformGrid1D clipped = make_grid(-1.0, 1.0, 11);
    CHECK_THROWS_WITH_AS(hermite_state(0, clipped), doctest::Contains("norm"),
                         ValidationError);
}

} // TEST_SUITE
