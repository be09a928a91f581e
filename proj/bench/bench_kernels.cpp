// Times the OpenMP row-parallel drivers against their serial reference twins
// and confirms the results stay bitwise identical. --quick shrinks the grids
// so the smoke test stays under a second.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <string>

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

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn> double timed(const Fn& fn) {
    const auto a = std::chrono::steady_clock::now();
    fn();
    const auto b = std::chrono::steady_clock::now();
    return seconds(a, b);
}

template <class V> bool same_bits(const V& a, const V& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-24s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   bitwise %s\n",
                name, serial, parallel, parallel > 0.0 ? serial / parallel : 0.0,
                identical ? "ok" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp threads: 1 (compiled without OpenMP)\n");
#endif

    const std::size_t nx = quick ? 65 : 257;
    const std::size_t nq = quick ? 129 : 513;
    const UniformGrid1D xg = make_grid(-6.0, 6.0, nx);
    const UniformGrid1D pq = make_grid(-10.0, 10.0, quick ? 257u : 1025u);
    const UniformGrid1D qg = make_grid(-6.0, 6.0, nq);
    const UniformGrid1D pg = make_grid(-8.0, 8.0, nq);
    const UniformGrid1D uq = make_grid(-16.0, 16.0, quick ? 129u : 513u);
    const UniformGrid1D wg = make_grid(-8.0, 8.0, quick ? 257u : 1025u);

    const GaussianPhaseState gt = evolve_gaussian({{0.0, 0.0}, {0.5, 0.0, 0.5}}, 1.0);
    const PhaseSamplerFn f = [gt](double q, double p) { return gaussian_density(gt, {q, p}); };
    const MatrixSamplerFn rho = [](double x, double xp) {
        return psi_gaussian_gauged(x, 1.0) * std::conj(psi_gaussian_gauged(xp, 1.0));
    };
    const WaveFunctionField psi0 = hermite_state(0, wg);

    bool all_ok = true;

    {
        DensityMatrixField par, ser;
        const double tp = timed([&] { par = f_to_rho(f, 1.0, xg, pq); });
        const double ts = timed([&] { ser = reference::f_to_rho(f, 1.0, xg, pq); });
        const bool ok = same_bits(par.values, ser.values);
        report("f_to_rho", ts, tp, ok);
        all_ok = all_ok && ok;
    }
    {
        PhaseSpaceField par, ser;
        const double tp = timed([&] { par = rho_to_f(rho, 1.0, qg, pg, uq); });
        const double ts = timed([&] { ser = reference::rho_to_f(rho, 1.0, qg, pg, uq); });
        const bool ok = same_bits(par.values, ser.values);
        report("rho_to_f", ts, tp, ok);
        all_ok = all_ok && ok;
    }
    {
        PhaseSpaceField par, ser;
        const double tp = timed([&] { par = propagate_distribution(f, 2.0, qg, pg); });
        const double ts =
            timed([&] { ser = reference::propagate_distribution(f, 2.0, qg, pg); });
        const bool ok = same_bits(par.values, ser.values);
        report("propagate_distribution", ts, tp, ok);
        all_ok = all_ok && ok;
    }
    {
        WaveFunctionField par, ser;
        const double tp = timed([&] { par = propagate_psi(psi0, 1.0, wg); });
        const double ts = timed([&] { ser = reference::propagate_psi(psi0, 1.0, wg); });
        const bool ok = same_bits(par.values, ser.values) && par.gauge_anchor == ser.gauge_anchor;
        report("propagate_psi", ts, tp, ok);
        all_ok = all_ok && ok;
    }

    if (!all_ok) {
        std::printf("bitwise mismatch between the parallel and serial drivers\n");
        return 1;
    }
    return 0;
}
