#include "liouspace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "liouspace/duality_maps.hpp"
#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/oracles.hpp"
#include "liouspace/phase_flow.hpp"
#include "liouspace/schrodinger_like.hpp"

namespace liouspace::verify {

namespace {

constexpr double kPi = std::numbers::pi;

void add(std::vector<Check>& v, const char* id, const char* suite, double measured, double tol,
         Check::Cmp cmp = Check::Cmp::le) {
    const bool pass = cmp == Check::Cmp::le ? measured <= tol : measured >= tol;
    v.push_back({id, suite, measured, tol, cmp, pass});
}

double wrap_angle(double a) { return std::atan2(std::sin(a), std::cos(a)); }

// ---- A1: second moments follow the flow linearization -------------------

std::vector<Check> criterion_a1() {
    std::vector<Check> v;
    const GaussianPhaseState g0{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    const GaussianPhaseState g2 = evolve_gaussian(g0, 2.0);
    double closed = std::abs(g2.cov.qq - 2.5);
    closed = std::max(closed, std::abs(g2.cov.qp - 1.0));
    closed = std::max(closed, std::abs(g2.cov.pp - 0.5));
    closed = std::max(closed, std::abs(g2.mean.q + 2.0));
    closed = std::max(closed, std::abs(g2.mean.p + 2.0));
    add(v, "A1.closed_form", "liouville", closed, 1e-12);
    add(v, "A1.flow_det", "liouville", std::abs(flow_matrix(2.0).det() - 1.0), 0.0);

    std::mt19937_64 rng(0x51a5eed1ULL);
    auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    const std::size_t n = 400000;
    const double sigma = std::sqrt(0.5);
    double sq = 0.0, sp = 0.0, sqq = 0.0, sqp = 0.0, spp = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::sqrt(-2.0 * std::log(unit()));
        const double a = 2.0 * kPi * unit();
        PhasePoint pt{sigma * r * std::cos(a), sigma * r * std::sin(a)};
        pt = flow_forward(pt, 2.0);
        sq += pt.q;
        sp += pt.p;
        sqq += pt.q * pt.q;
        sqp += pt.q * pt.p;
        spp += pt.p * pt.p;
    }
    const double dn = static_cast<double>(n);
    const double mq = sq / dn, mp = sp / dn;
    double mc = std::abs(sqq / dn - mq * mq - 2.5);
    mc = std::max(mc, std::abs(sqp / dn - mq * mp - 1.0));
    mc = std::max(mc, std::abs(spp / dn - mp * mp - 0.5));
    mc = std::max(mc, std::abs(mq + 2.0));
    mc = std::max(mc, std::abs(mp + 2.0));
    add(v, "A1.monte_carlo", "liouville", mc, 2e-2);

    double hdev = 0.0;
    for (const PhasePoint pt : {PhasePoint{0.0, 0.0}, PhasePoint{1.0, -1.0},
                                PhasePoint{0.3, 2.2}, PhasePoint{-2.0, 0.7}})
        for (const double t : {0.5, 2.0, 7.0})
            hdev = std::max(hdev,
                            std::abs(hamiltonian(flow_forward(pt, t)) - hamiltonian(pt)));
    add(v, "A1.energy_conserved", "liouville", hdev, 1e-12);
    return v;
}

// ---- A2: quadrature kernel pins the wave-function exponent --------------

std::vector<Check> criterion_a2() {
    std::vector<Check> v;
    const UniformGrid1D probe = make_grid(-4.0, 4.0, 33);
    const UniformGrid1D pquad = make_grid(-10.0, 10.0, 2049);
    double worst = 0.0;
    for (const double t : {0.0, 0.5, 1.0, 2.0})
        for (std::size_t i = 0; i < probe.n; ++i)
            for (std::size_t j = 0; j < probe.n; ++j) {
                const double x = probe.point(i), xp = probe.point(j);
                const cplx oracle = brute_force_rho(x, xp, t, pquad);
                const cplx prod =
                    psi_gaussian_gauged(x, t) * std::conj(psi_gaussian_gauged(xp, t));
                worst = std::max(worst, std::abs(oracle - prod));
            }
    add(v, "A2.kernel_match", "vonneumann", worst, 1e-8);
    for (const double t : {0.5, 2.0}) {
        double dev = 0.0;
        for (std::size_t i = 0; i < probe.n; ++i)
            for (std::size_t j = 0; j < probe.n; ++j) {
                const double x = probe.point(i), xp = probe.point(j);
                const cplx oracle = brute_force_rho(x, xp, t, pquad);
                const cplx prod =
                    psi_gaussian_raw_t2(x, t) * std::conj(psi_gaussian_raw_t2(xp, t));
                dev = std::max(dev, std::abs(oracle - prod));
            }
        add(v, t == 0.5 ? "A2.variant_rejected_t05" : "A2.variant_rejected_t2", "vonneumann",
            dev, 1e-2, Check::Cmp::ge);
    }
    return v;
}

// ---- A3: normalization of the closed-form solution ----------------------

std::vector<Check> criterion_a3() {
    std::vector<Check> v;
    double worst = 0.0;
    for (const double t : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        const double half = std::max(10.0, 7.0 * std::sqrt(1.0 + t * t));
        const double center = -0.5 * t * t;
        const UniformGrid1D g = make_grid(center - half, center + half, 4097);
        double nrm = 0.0;
        for (std::size_t i = 0; i < g.n; ++i)
            nrm += trapezoid_weight(g, i) * std::norm(psi_gaussian_raw(g.point(i), t));
        worst = std::max(worst, std::abs(nrm - 1.0));
    }
    add(v, "A3.norm", "schrodinger", worst, 1e-9);
    return v;
}

// ---- A4: raw residual is the x-independent constant 1/2 at t = 1 --------

std::vector<Check> criterion_a4() {
    std::vector<Check> v;
    const WaveSpaceTimeFn raw = [](double x, double t) { return psi_gaussian_raw(x, t); };
    std::vector<cplx> fd, an;
    for (int i = 0; i <= 20; ++i) {
        const double x = -2.0 + 4.0 * i / 20.0;
        const cplx base = psi_gaussian_raw(x, 1.0);
        fd.push_back(schrodinger_residual(raw, x, 1.0, 1e-4, 1e-4) / base);
        an.push_back(schrodinger_residual_raw_analytic(x, 1.0) / base);
    }
    double fd_dev = 0.0, an_dev = 0.0, spread = 0.0;
    for (const cplx& r : fd) fd_dev = std::max(fd_dev, std::abs(r - 0.5));
    for (const cplx& r : an)
        an_dev = std::max(an_dev, std::abs(r - residual_coefficient(1.0)));
    for (std::size_t i = 0; i < fd.size(); ++i)
        for (std::size_t j = i + 1; j < fd.size(); ++j)
            spread = std::max(spread, std::abs(fd[i] - fd[j]));
    add(v, "A4.fd_ratio", "schrodinger", fd_dev, 1e-4);
    add(v, "A4.fd_x_independent", "schrodinger", spread, 1e-6);
    add(v, "A4.analytic_ratio", "schrodinger", an_dev, 1e-10);
    add(v, "A4.coefficient_half", "schrodinger",
        std::abs(residual_coefficient(1.0) - 0.5), 0.0);
    return v;
}

// ---- A5: gauge phase, integrator vs closed form --------------------------

std::vector<Check> criterion_a5() {
    std::vector<Check> v;
    const GaugePhase gp = phase_integrate(5.0, 1e-3);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < gp.knot_t.size(); ++k) {
        const double tk = gp.knot_t[k];
        worst = std::max(worst, std::abs(gp.value(tk) - phase_closed(tk)));
        const double mid = 0.5 * (gp.knot_t[k] + gp.knot_t[k + 1]);
        worst = std::max(worst, std::abs(gp.value(mid) - phase_closed(mid)));
    }
    worst = std::max(worst,
                     std::abs(gp.value(gp.knot_t.back()) - phase_closed(gp.knot_t.back())));
    add(v, "A5.integrated_matches_closed", "schrodinger", worst, 1e-8);
    const double phi1 = -5.0 / 48.0 - kPi / 8.0;
    add(v, "A5.phi_at_1", "schrodinger", std::abs(phase_closed(1.0) - phi1), 1e-12);
    add(v, "A5.integrated_phi_at_1", "schrodinger", std::abs(gp.value(1.0) - phi1), 1e-8);
    double dworst = 0.0, cworst = 0.0;
    for (const double t : {0.0, 0.3, 1.0, 2.0, 3.7, 5.0}) {
        const double fdd = (phase_closed(t + 1e-5) - phase_closed(t - 1e-5)) / 2e-5;
        dworst = std::max(dworst, std::abs(fdd - phase_rhs(t)));
        cworst = std::max(cworst, std::abs(residual_coefficient(t) + phase_rhs(t)));
    }
    add(v, "A5.derivative_consistent", "schrodinger", dworst, 1e-6);
    add(v, "A5.cancellation_exact", "schrodinger", cworst, 0.0);
    return v;
}

// ---- A6: the gauged solution actually solves the equation ---------------

std::vector<Check> criterion_a6() {
    std::vector<Check> v;
    double worst = 0.0;
    for (const double t : {0.1, 1.0, 3.0})
        for (int i = 0; i <= 40; ++i) {
            const double x = -4.0 + 8.0 * i / 40.0;
            worst = std::max(worst, std::abs(schrodinger_residual_gauged_analytic(x, t)));
        }
    add(v, "A6.analytic_residual", "schrodinger", worst, 1e-10);
    const WaveSpaceTimeFn gauged = [](double x, double t) { return psi_gaussian_gauged(x, t); };
    double fd_worst = 0.0;
    for (const double t : {0.1, 1.0, 3.0})
        for (int i = 0; i <= 8; ++i) {
            const double x = -3.0 + 6.0 * i / 8.0;
            fd_worst = std::max(fd_worst,
                                std::abs(schrodinger_residual(gauged, x, t, 1e-4, 1e-4)));
        }
    add(v, "A6.fd_residual", "schrodinger", fd_worst, 1e-5);
    return v;
}

// ---- A7: kernel propagation reproduces the closed solution --------------

std::vector<Check> criterion_a7() {
    std::vector<Check> v;
    const UniformGrid1D xg = make_grid(-8.0, 8.0, 513);
    const WaveFunctionField psi0 = hermite_state(0, xg);
    const WaveFunctionField one = propagate_psi(psi0, 1.0, xg);
    std::vector<cplx> exact(xg.n);
    for (std::size_t i = 0; i < xg.n; ++i) exact[i] = psi_gaussian_gauged(xg.point(i), 1.0);
    double mod_err = 0.0;
    for (std::size_t i = 0; i < xg.n; ++i)
        mod_err = std::max(mod_err, std::abs(std::abs(one.values[i]) - std::abs(exact[i])));
    add(v, "A7.modulus", "greens", mod_err, 1e-6);
    const std::size_t ref = argmax_abs(exact);
    const double dref = std::arg(one.values[ref] / exact[ref]);
    double ph_err = 0.0;
    for (std::size_t i = 0; i < xg.n; ++i)
        if (std::abs(exact[i]) > 1e-6)
            ph_err = std::max(
                ph_err, std::abs(wrap_angle(std::arg(one.values[i] / exact[i]) - dref)));
    add(v, "A7.phase_uniform", "greens", ph_err, 1e-6);
    add(v, "A7.norm", "greens", std::abs(one.norm() - 1.0), 1e-6);

    const WaveFunctionField half = propagate_psi(psi0, 0.5, xg);
    const WaveFunctionField two = propagate_psi(half, 0.5, xg);
    double smod = 0.0;
    for (std::size_t i = 0; i < xg.n; ++i)
        smod = std::max(smod, std::abs(std::abs(two.values[i]) - std::abs(one.values[i])));
    add(v, "A7.semigroup_modulus", "greens", smod, 1e-5);
    const std::size_t ref2 = argmax_abs(one.values);
    const double dref2 = std::arg(two.values[ref2] / one.values[ref2]);
    double sph = 0.0;
    for (std::size_t i = 0; i < xg.n; ++i)
        if (std::abs(one.values[i]) > 1e-6)
            sph = std::max(
                sph, std::abs(wrap_angle(std::arg(two.values[i] / one.values[i]) - dref2)));
    add(v, "A7.semigroup_phase", "greens", sph, 1e-5);
    return v;
}

// ---- A8: f -> rho -> f round trip and the position marginal -------------

std::vector<Check> criterion_a8() {
    std::vector<Check> v;
    const UniformGrid1D xg = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D pq = make_grid(-10.0, 10.0, 2049);
    const UniformGrid1D qg = make_grid(-6.0, 6.0, 193);
    const UniformGrid1D pg = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D uq = make_grid(-18.0, 18.0, 289);
    const GaussianPhaseState g0{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    for (const double t : {0.0, 1.0}) {
        const GaussianPhaseState gt = evolve_gaussian(g0, t);
        const PhaseSamplerFn f_exact = [gt](double q, double p) {
            return gaussian_density(gt, {q, p});
        };
        const DensityMatrixField rho = f_to_rho(f_exact, t, xg, pq);
        add(v, t == 0.0 ? "A8.trace_t0" : "A8.trace_t1", "roundtrip",
            std::abs(rho.trace() - 1.0), 1e-6);
        const PhaseSpaceField f_rt = rho_to_f(rho, qg, pg, uq);
        double err = 0.0;
        for (std::size_t i = 0; i < qg.n; ++i)
            for (std::size_t j = 0; j < pg.n; ++j)
                err = std::max(err,
                               std::abs(f_rt.at(i, j) - f_exact(qg.point(i), pg.point(j))));
        add(v, t == 0.0 ? "A8.roundtrip_t0" : "A8.roundtrip_t1", "roundtrip", err, 1e-6);
        WaveFunctionField psi;
        if (t == 0.0) {
            psi = hermite_state(0, qg);
        } else {
            psi.xgrid = qg;
            psi.time = t;
            psi.values.resize(qg.n);
            for (std::size_t i = 0; i < qg.n; ++i)
                psi.values[i] = psi_gaussian_gauged(qg.point(i), t);
            fix_gauge(psi, argmax_abs(psi.values));
        }
        const ResidualReport rep = marginal_check(f_rt, psi);
        add(v, t == 0.0 ? "A8.marginal_t0" : "A8.marginal_t1", "roundtrip", rep.max_abs, 1e-8);
    }
    return v;
}

// ---- A9: negativity separates the excited state from a classical one ----

std::vector<Check> criterion_a9() {
    std::vector<Check> v;
    const UniformGrid1D xg = make_grid(-6.0, 6.0, 257);
    const UniformGrid1D pg = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D uq = make_grid(-12.0, 12.0, 257);
    const WaveFunctionField h1 = hermite_state(1, xg);
    const PhaseSpaceField f1 = wavefunction_to_f(h1, xg, pg, uq);
    const NegativityReport rep = negativity_scan(f1);
    add(v, "A9.min_value", "negativity", std::abs(rep.min_value + 1.0 / kPi), 1e-3);
    add(v, "A9.argmin_origin", "negativity",
        std::abs(rep.argmin.q) + std::abs(rep.argmin.p), 0.0);
    add(v, "A9.flagged_nonclassical", "negativity", rep.classical ? 1.0 : 0.0, 0.0);
    add(v, "A9.negative_mass", "negativity",
        std::abs(rep.negative_mass - (2.0 * std::exp(-0.5) - 1.0)), 1e-3);

    const GaussianPhaseState g0{{0.0, 0.0}, {0.5, 0.0, 0.5}};
    const auto f0 = [g0](double q, double p) { return gaussian_density(g0, {q, p}); };
    const PhaseSpaceField fc = propagate_distribution(f0, 1.0, xg, pg);
    const NegativityReport repc = negativity_scan(fc);
    add(v, "A9.classical_min", "negativity", repc.min_value, -1e-12, Check::Cmp::ge);
    add(v, "A9.classical_flag", "negativity", repc.classical ? 0.0 : 1.0, 0.0);
    add(v, "A9.classical_mass", "negativity", std::abs(fc.integral() - 1.0), 1e-6);
    return v;
}

// ---- A10: propagation commutes with the duality maps --------------------

std::vector<Check> criterion_a10() {
    std::vector<Check> v;
    const UniformGrid1D xg = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D qg = make_grid(-6.0, 6.0, 193);
    const UniformGrid1D pg = make_grid(-8.0, 8.0, 257);
    const UniformGrid1D uq = make_grid(-16.0, 16.0, 257);
    const UniformGrid1D uq0 = make_grid(-12.0, 12.0, 513);

    const WaveFunctionField psi0 = hermite_state(0, xg);
    const WaveFunctionField psi1 = propagate_psi(psi0, 1.0, xg);
    const PhaseSpaceField lhs = wavefunction_to_f(psi1, qg, pg, uq);

    const double pref = std::pow(kPi, -0.25);
    const auto wigner0 = [uq0, pref](double q, double p) -> double {
        cplx acc{};
        for (std::size_t k = 0; k < uq0.n; ++k) {
            const double u = uq0.point(k);
            const double a = q + 0.5 * u, b = q - 0.5 * u;
            const double prod =
                pref * std::exp(-0.5 * a * a) * pref * std::exp(-0.5 * b * b);
            acc += trapezoid_weight(uq0, k) * prod * std::polar(1.0, -p * u);
        }
        return acc.real() / (2.0 * kPi);
    };
    const PhaseSpaceField rhs = propagate_distribution(wigner0, 1.0, qg, pg);

    double err = 0.0, err2 = 0.0;
    for (std::size_t i = 0; i < qg.n; ++i)
        for (std::size_t j = 0; j < pg.n; ++j) {
            const double q = qg.point(i), p = pg.point(j);
            err = std::max(err, std::abs(lhs.at(i, j) - rhs.at(i, j)));
            const double a = p + 1.0, b = q - p - 0.5;
            err2 = std::max(err2,
                            std::abs(rhs.at(i, j) - std::exp(-a * a - b * b) / kPi));
        }
    add(v, "A10.square_commutes", "greens", err, 1e-5);
    add(v, "A10.pullback_exact", "greens", err2, 1e-12);
    return v;
}

// ---- A11: stencils converge at second order ------------------------------

std::vector<Check> criterion_a11() {
    std::vector<Check> v;
    const auto order_dev = [](const OrderEstimate& est) {
        return est.order ? std::abs(*est.order - 2.0)
                         : std::numeric_limits<double>::quiet_NaN();
    };

    const GaussianPhaseState g0{{0.2, -0.1}, {0.7, 0.2, 0.55}};
    const PhaseSpaceTimeFn f = [g0](double q, double p, double t) {
        return gaussian_density(evolve_gaussian(g0, t), {q, p});
    };
    const auto r_liou = [&f](double h) {
        return std::abs(liouville_residual(f, {0.7, -0.3}, 0.8, h));
    };
    add(v, "A11.liouville_order", "liouville",
        order_dev(convergence_order(r_liou, 0.1, 4)), 0.1);

    const MatrixSpaceTimeFn rho = [](double x, double xp, double t) {
        return psi_gaussian_gauged(x, t) * std::conj(psi_gaussian_gauged(xp, t));
    };
    const auto r_vn = [&rho](double h) {
        return std::abs(von_neumann_residual(rho, 0.9, -0.4, 0.7, h));
    };
    add(v, "A11.vonneumann_order", "vonneumann",
        order_dev(convergence_order(r_vn, 0.1, 4)), 0.1);

    const WaveSpaceTimeFn psi = [](double x, double t) { return psi_gaussian_gauged(x, t); };
    const auto r_s = [&psi](double h) {
        return std::abs(schrodinger_residual(psi, 0.7, 1.3, h, h));
    };
    add(v, "A11.schrodinger_order", "schrodinger",
        order_dev(convergence_order(r_s, 0.1, 4)), 0.1);
    return v;
}

struct Criterion {
    const char* id;
    const char* title;
    std::vector<Check> (*run)();
    const char* suites; // space-separated membership
};

const Criterion kCriteria[] = {
    {"A1", "Gaussian moments follow the flow linearization", &criterion_a1, "liouville"},
    {"A2", "wave-function products match the quadrature kernel", &criterion_a2, "vonneumann"},
    {"A3", "closed-form solution stays normalized", &criterion_a3, "schrodinger"},
    {"A4", "raw residual is the constant 1/2 at t=1", &criterion_a4, "schrodinger"},
    {"A5", "gauge phase integrator matches the closed form", &criterion_a5, "schrodinger"},
    {"A6", "gauged solution solves the equation", &criterion_a6, "schrodinger"},
    {"A7", "kernel propagation reproduces the closed solution", &criterion_a7, "greens"},
    {"A8", "duality round trip and position marginal", &criterion_a8, "roundtrip"},
    {"A9", "negativity flags the excited state only", &criterion_a9, "negativity"},
    {"A10", "propagation commutes with the duality maps", &criterion_a10, "greens"},
    {"A11", "stencil residuals converge at second order", &criterion_a11,
     "liouville vonneumann schrodinger"},
};

// Slack of a check: negative means failing; the smallest slack is the detail
// reported for a criterion.
double slack(const Check& c) {
    return c.cmp == Check::Cmp::le ? c.tolerance - c.measured : c.measured - c.tolerance;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"liouville", "vonneumann", "schrodinger",
                                                   "roundtrip", "negativity", "greens"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string known = "all";
        for (const auto& n : names) known += "|" + n;
        throw ValidationError("unknown suite '" + suite + "', expected " + known);
    }
    std::vector<Check> out;
    for (const Criterion& c : kCriteria) {
        if (suite != "all" && std::strstr(c.suites, suite.c_str()) == nullptr) continue;
        for (Check& ck : c.run())
            if (suite == "all" || ck.suite == suite) out.push_back(std::move(ck));
    }
    return out;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) {
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        try {
            const std::vector<Check> checks = c.run();
            r.pass = true;
            double worst = std::numeric_limits<double>::infinity();
            const Check* worst_check = nullptr;
            for (const Check& ck : checks) {
                if (!ck.pass) r.pass = false;
                const double s = slack(ck);
                if (worst_check == nullptr || s < worst || std::isnan(s)) {
                    worst = s;
                    worst_check = &ck;
                }
            }
            if (worst_check != nullptr)
                r.detail = worst_check->id + ": measured=" + format_double(worst_check->measured) +
                           " tolerance=" + format_double(worst_check->tolerance) +
                           (worst_check->cmp == Check::Cmp::le ? " (<=)" : " (>=)");
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace liouspace::verify
