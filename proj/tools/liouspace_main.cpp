// Command-line front end: evolve Gaussian states, convert between
// phase-space distributions, density matrices and wave functions, evaluate
// the propagation kernel and the gauge phase, and run the verification
// suites. Exit codes: 0 success, 1 failed computation or failed checks,
// 2 bad arguments or malformed input.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "liouspace/duality_maps.hpp"
#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/log.hpp"
#include "liouspace/oracles.hpp"
#include "liouspace/phase_flow.hpp"
#include "liouspace/schrodinger_like.hpp"
#include "liouspace/verify.hpp"

namespace {

using namespace liouspace;

UniformGrid1D grid3(const std::vector<double>& v, std::size_t offset, const char* name) {
    const double n = v[offset + 2];
    if (!(n >= 2.0) || n != std::floor(n) || n > 1e7)
        throw ValidationError(std::string(name) + ": point count must be an integer >= 2");
    return make_grid(v[offset], v[offset + 1], static_cast<std::size_t>(n));
}

// Sets the classical flag only when the scan and the mass check both pass.
void flag_if_classical(PhaseSpaceField& f) {
    const NegativityReport rep = negativity_scan(f);
    const double mass_dev = std::abs(f.integral() - 1.0);
    if (rep.classical && mass_dev <= 1e-6) {
        f.classical = true;
    } else {
        log_line(LogLevel::info,
                 "field not flagged classical: min=" + format_double(rep.min_value) +
                     " mass_deviation=" + format_double(mass_dev));
    }
}

void cmd_evolve(double q0, double p0, const std::vector<double>& cov, double t,
                const std::vector<double>& grid, const std::string& out) {
    const GaussianPhaseState g0{{q0, p0}, {cov[0], cov[1], cov[2]}};
    g0.validate();
    const GaussianPhaseState gt = evolve_gaussian(g0, t);
    PhaseSpaceField f;
    f.qgrid = grid3(grid, 0, "evolve q grid");
    f.pgrid = grid3(grid, 3, "evolve p grid");
    f.time = t;
    f.values.resize(f.qgrid.n * f.pgrid.n);
    for (std::size_t i = 0; i < f.qgrid.n; ++i)
        for (std::size_t j = 0; j < f.pgrid.n; ++j)
            f.at(i, j) = gaussian_density(gt, {f.qgrid.point(i), f.pgrid.point(j)});
    flag_if_classical(f);
    write_field(out, f);
    std::cout << "t=" << format_double(t) << " mean_q=" << format_double(gt.mean.q)
              << " mean_p=" << format_double(gt.mean.p)
              << " sigma_qq=" << format_double(gt.cov.qq)
              << " sigma_qp=" << format_double(gt.cov.qp)
              << " sigma_pp=" << format_double(gt.cov.pp) << " wrote=" << out << '\n';
}

void cmd_f2rho(const std::string& in, const std::string& out, const std::vector<double>& xg,
               const std::vector<double>& pq) {
    const PhaseSpaceField f = read_phase_space_field(in);
    const DensityMatrixField rho =
        f_to_rho(f, grid3(xg, 0, "f2rho x grid"), grid3(pq, 0, "f2rho p quadrature"));
    write_field(out, rho);
    std::cout << "wrote=" << out << " n=" << rho.xgrid.n
              << " trace=" << format_double(rho.trace())
              << " hermiticity_defect=" << format_double(rho.hermiticity_defect()) << '\n';
}

void cmd_rho2f(const std::string& in, const std::string& out, const std::vector<double>& qg,
               const std::vector<double>& pg, const std::vector<double>& uq) {
    const DensityMatrixField rho = read_density_matrix(in);
    PhaseSpaceField f = rho_to_f(rho, grid3(qg, 0, "rho2f q grid"),
                                 grid3(pg, 0, "rho2f p grid"), grid3(uq, 0, "rho2f u quadrature"));
    const NegativityReport rep = negativity_scan(f);
    if (rep.classical && std::abs(f.integral() - 1.0) <= 1e-6) f.classical = true;
    write_field(out, f);
    std::cout << "wrote=" << out << " nq=" << f.qgrid.n << " np=" << f.pgrid.n
              << " min_value=" << format_double(rep.min_value)
              << " classical=" << (f.classical ? 1 : 0) << '\n';
}

void cmd_factorize(const std::string& in, const std::string& out, double tol) {
    const DensityMatrixField rho = read_density_matrix(in);
    const WaveFunctionField psi = factorize_density(rho, tol);
    if (!out.empty()) write_field(out, psi);
    std::cout << "anchor_index=" << psi.gauge_anchor
              << " anchor_x=" << format_double(psi.xgrid.point(psi.gauge_anchor))
              << " purity=" << format_double(purity(rho))
              << " norm=" << format_double(psi.norm());
    if (!out.empty()) std::cout << " wrote=" << out;
    std::cout << '\n';
}

void cmd_propagate(const std::string& in, const std::string& out, double t,
                   const std::vector<double>& xg) {
    const WaveFunctionField psi0 = read_wave_function(in);
    const UniformGrid1D og =
        xg.empty() ? psi0.xgrid : grid3(xg, 0, "propagate output grid");
    const WaveFunctionField res = propagate_psi(psi0, t, og);
    write_field(out, res);
    std::cout << "wrote=" << out << " t=" << format_double(res.time)
              << " norm=" << format_double(res.norm())
              << " anchor_index=" << res.gauge_anchor << '\n';
}

void cmd_phase(double t, const std::string& method, double step, const std::string& out) {
    double phi = 0.0;
    if (method == "closed") {
        phi = phase_closed(t);
        if (!out.empty()) {
            PhaseCurve curve;
            const int n = 201;
            const double lo = std::min(0.0, t), hi = std::max(0.0, t);
            for (int i = 0; i < n; ++i) {
                const double ti = lo + (hi - lo) * i / (n - 1);
                curve.t.push_back(ti);
                curve.phi.push_back(phase_closed(ti));
            }
            write_field(out, curve);
        }
    } else if (method == "ode") {
        const GaugePhase gp = phase_integrate(t, step);
        phi = gp.value(t);
        if (!out.empty()) {
            PhaseCurve curve;
            curve.t = gp.knot_t;
            curve.phi = gp.knot_phi;
            write_field(out, curve);
        }
    } else {
        throw ValidationError("phase: unknown method '" + method + "', expected closed|ode");
    }
    std::cout << "t=" << format_double(t) << " phi=" << format_double(phi)
              << " method=" << method;
    if (!out.empty()) std::cout << " wrote=" << out;
    std::cout << '\n';
}

void cmd_greens_eval(double x, double xp, double t) {
    const cplx g = greens(x, xp, t);
    std::cout << "t=" << format_double(t) << " x=" << format_double(x)
              << " xp=" << format_double(xp) << " re=" << format_double(g.real())
              << " im=" << format_double(g.imag()) << " abs=" << format_double(std::abs(g))
              << " arg=" << format_double(std::arg(g)) << '\n';
}

int cmd_verify(const std::string& suite) {
    const std::vector<verify::Check> checks = verify::run_suite(suite);
    std::size_t failures = 0;
    for (const verify::Check& ck : checks) {
        std::cout << "check=" << ck.id << " suite=" << ck.suite
                  << " measured=" << format_double(ck.measured)
                  << " tolerance=" << format_double(ck.tolerance)
                  << " cmp=" << (ck.cmp == verify::Check::Cmp::le ? "le" : "ge")
                  << " status=" << (ck.pass ? "pass" : "fail") << '\n';
        if (!ck.pass) ++failures;
    }
    std::cout << "suite=" << suite << " checks=" << checks.size() << " failures=" << failures
              << '\n';
    return failures == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"phase-space / wave-function duality toolkit for a particle under constant "
                 "force (H = p^2/2 + q)"};
    app.require_subcommand(1);
    int rc = 0;

    // evolve
    auto* evolve = app.add_subcommand("evolve", "evolve a Gaussian state and write the field");
    double ev_q0 = 0.0, ev_p0 = 0.0, ev_t = 0.0;
    std::vector<double> ev_cov{0.5, 0.0, 0.5};
    std::vector<double> ev_grid{-6.0, 6.0, 257.0, -8.0, 8.0, 257.0};
    std::string ev_out;
    evolve->add_option("--q0", ev_q0, "initial mean position")->capture_default_str();
    evolve->add_option("--p0", ev_p0, "initial mean momentum")->capture_default_str();
    evolve->add_option("--cov", ev_cov, "covariance qq,qp,pp")
        ->expected(3)
        ->delimiter(',')
        ->capture_default_str();
    evolve->add_option("--t", ev_t, "evolution time")->required();
    evolve->add_option("--grid", ev_grid, "output grid qmin,qmax,nq,pmin,pmax,np")
        ->expected(6)
        ->delimiter(',');
    evolve->add_option("--out", ev_out, "output field file")->required();
    evolve->callback([&] { cmd_evolve(ev_q0, ev_p0, ev_cov, ev_t, ev_grid, ev_out); });

    // f2rho
    auto* f2rho = app.add_subcommand("f2rho", "map a phase-space field to a density matrix");
    std::string fr_in, fr_out;
    std::vector<double> fr_xg{-6.0, 6.0, 257.0}, fr_pq{-10.0, 10.0, 2049.0};
    f2rho->add_option("--in", fr_in, "phase-space field file")->required();
    f2rho->add_option("--out", fr_out, "output density-matrix file")->required();
    f2rho->add_option("--xgrid", fr_xg, "output axis xmin,xmax,n")->expected(3)->delimiter(',');
    f2rho->add_option("--pquad", fr_pq, "p quadrature pmin,pmax,n")->expected(3)->delimiter(',');
    f2rho->callback([&] { cmd_f2rho(fr_in, fr_out, fr_xg, fr_pq); });

    // rho2f
    auto* rho2f = app.add_subcommand("rho2f", "map a density matrix to a phase-space field");
    std::string rf_in, rf_out;
    std::vector<double> rf_qg{-6.0, 6.0, 257.0}, rf_pg{-8.0, 8.0, 257.0},
        rf_uq{-12.0, 12.0, 257.0};
    rho2f->add_option("--in", rf_in, "density-matrix file")->required();
    rho2f->add_option("--out", rf_out, "output phase-space field file")->required();
    rho2f->add_option("--qgrid", rf_qg, "output q axis qmin,qmax,n")->expected(3)->delimiter(',');
    rho2f->add_option("--pgrid", rf_pg, "output p axis pmin,pmax,n")->expected(3)->delimiter(',');
    rho2f->add_option("--uquad", rf_uq, "u quadrature umin,umax,n")->expected(3)->delimiter(',');
    rho2f->callback([&] { cmd_rho2f(rf_in, rf_out, rf_qg, rf_pg, rf_uq); });

    // factorize
    auto* factorize =
        app.add_subcommand("factorize", "split a rank-one density matrix into a wave function");
    std::string fa_in, fa_out;
    double fa_tol = 1e-6;
    factorize->add_option("--in", fa_in, "density-matrix file")->required();
    factorize->add_option("--out", fa_out, "output wave-function file");
    factorize->add_option("--tol", fa_tol, "purity / reconstruction tolerance")
        ->capture_default_str();
    factorize->callback([&] { cmd_factorize(fa_in, fa_out, fa_tol); });

    // propagate
    auto* propagate =
        app.add_subcommand("propagate", "advance a wave function with the integral kernel");
    std::string pr_in, pr_out;
    double pr_t = 0.0;
    std::vector<double> pr_xg;
    propagate->add_option("--in", pr_in, "wave-function file")->required();
    propagate->add_option("--out", pr_out, "output wave-function file")->required();
    propagate->add_option("--t", pr_t, "propagation time (>= 1e-3)")->required();
    propagate->add_option("--xgrid", pr_xg, "output axis xmin,xmax,n (default: input axis)")
        ->expected(3)
        ->delimiter(',');
    propagate->callback([&] { cmd_propagate(pr_in, pr_out, pr_t, pr_xg); });

    // phase
    auto* phase = app.add_subcommand("phase", "evaluate the accumulated gauge phase");
    double ph_t = 0.0, ph_step = 1e-3;
    std::string ph_method = "closed", ph_out;
    phase->add_option("--t", ph_t, "target time")->required();
    phase->add_option("--method", ph_method, "closed|ode")->capture_default_str();
    phase->add_option("--step", ph_step, "integrator step")->capture_default_str();
    phase->add_option("--out", ph_out, "optional phase-curve file");
    phase->callback([&] { cmd_phase(ph_t, ph_method, ph_step, ph_out); });

    // greens-eval
    auto* ge = app.add_subcommand("greens-eval", "evaluate the propagation kernel G(x,x',t)");
    double ge_x = 0.0, ge_xp = 0.0, ge_t = 0.0;
    ge->add_option("--x", ge_x, "output position")->required();
    ge->add_option("--xp", ge_xp, "input position")->required();
    ge->add_option("--t", ge_t, "time (>= 1e-3)")->required();
    ge->callback([&] { cmd_greens_eval(ge_x, ge_xp, ge_t); });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite = "all";
    verify_cmd
        ->add_option("--suite", vf_suite,
                     "all|liouville|vonneumann|schrodinger|roundtrip|negativity|greens")
        ->capture_default_str();
    verify_cmd->callback([&] { rc = cmd_verify(vf_suite); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const liouspace::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const liouspace::ComputeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
