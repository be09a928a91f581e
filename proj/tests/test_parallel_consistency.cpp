#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liouspace/duality_maps.hpp"
#include "liouspace/oracles.hpp"
#include "liouspace/phase_flow.hpp"
#include "liouspace/reference.hpp"
#include "liouspace/schrodinger_like.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace liouspace;

namespace {

constexpr double kPi = std::numbers::pi;

PhaseSamplerFn evolved_gaussian(double t) {
    const GaussianPhaseState g = evolve_gaussian({{0.0, 0.0}, {0.5, 0.0, 0.5}}, t);
    return [g](double q, double p) { return gaussian_density(g, {q, p}); };
}

MatrixSamplerFn gauged_kernel(double t) {
    return [t](double x, double xp) {
        return psi_gaussian_gauged(x, t) * std::conj(psi_gaussian_gauged(xp, t));
    };
}

template <class Field>
bool bitwise_equal(const Field& a, const Field& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        if (a.values[k] != b.values[k]) return false;
    return true;
}

#ifdef _OPENMP
// Pins the thread count for one scope; single-threaded runs just get 1 == 1.
struct ThreadGuard {
    int saved;
    explicit ThreadGuard(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadGuard() { omp_set_num_threads(saved); }
};
#endif

} // namespace

TEST_SUITE("parallel") {

TEST_CASE("f_to_rho: parallel driver matches the serial reference bitwise") {
    const UniformGrid1D xg = make_grid(-5.0, 5.0, 65);
    const UniformGrid1D pq = make_grid(-9.0, 9.0, 257);
    const PhaseSamplerFn f = evolved_gaussian(1.0);
    const DensityMatrixField par = f_to_rho(f, 1.0, xg, pq);
    const DensityMatrixField ser = reference::f_to_rho(f, 1.0, xg, pq);
    CHECK(bitwise_equal(par, ser));
    CHECK(par.time == ser.time);
}

TEST_CASE("rho_to_f: parallel driver matches the serial reference bitwise") {
    const UniformGrid1D qg = make_grid(-4.0, 4.0, 49);
    const UniformGrid1D pg = make_grid(-6.0, 6.0, 49);
    const UniformGrid1D uq = make_grid(-14.0, 14.0, 257);
    const PhaseSpaceField par = rho_to_f(gauged_kernel(1.0), 1.0, qg, pg, uq);
    const PhaseSpaceField ser = reference::rho_to_f(gauged_kernel(1.0), 1.0, qg, pg, uq);
    CHECK(bitwise_equal(par, ser));
}

TEST_CASE("propagate_distribution: parallel driver matches the serial reference") {
    const UniformGrid1D qg = make_grid(-6.0, 6.0, 129);
    const UniformGrid1D pg = make_grid(-8.0, 8.0, 97);
    const PhaseSamplerFn f0 = evolved_gaussian(0.0);
    const PhaseSpaceField par = propagate_distribution(f0, 2.0, qg, pg);
    const PhaseSpaceField ser = reference::propagate_distribution(f0, 2.0, qg, pg);
    CHECK(bitwise_equal(par, ser));
    CHECK(par.time == ser.time);
}

TEST_CASE("propagate_psi: parallel driver matches the serial reference bitwise") {
    const UniformGrid1D g = make_grid(-8.0, 8.0, 257);
    const WaveFunctionField psi0 = hermite_state(0, g);
    const WaveFunctionField par = propagate_psi(psi0, 1.0, g);
    const WaveFunctionField ser = reference::propagate_psi(psi0, 1.0, g);
    CHECK(bitwise_equal(par, ser));
    CHECK(par.gauge_anchor == ser.gauge_anchor);
    CHECK(par.time == ser.time);
}

TEST_CASE("results do not depend on the thread count") {
    const UniformGrid1D xg = make_grid(-5.0, 5.0, 49);
    const UniformGrid1D pq = make_grid(-9.0, 9.0, 129);
    const PhaseSamplerFn f = evolved_gaussian(0.5);
    DensityMatrixField three, one;
    {
#ifdef _OPENMP
        ThreadGuard guard(3);
#endif
        three = f_to_rho(f, 0.5, xg, pq);
    }
    {
#ifdef _OPENMP
        ThreadGuard guard(1);
#endif
        one = f_to_rho(f, 0.5, xg, pq);
    }
    CHECK(bitwise_equal(three, one));
}

} // TEST_SUITE
