#include "liouspace/duality_maps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "kernels.hpp"
#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/log.hpp"

namespace liouspace {

namespace {

// Spot-check Hermiticity of a matrix sampler over the window the transform
// is about to integrate; a full scan would cost as much as the transform.
void check_sampler_hermitian(const MatrixSamplerFn& rho, const UniformGrid1D& qgrid,
                             const UniformGrid1D& uquad) {
    static constexpr double q_frac[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    static constexpr double u_frac[] = {0.25, 0.4, 0.5, 0.6, 0.75};
    double defect = 0.0, mag = 0.0;
    for (double fq : q_frac)
        for (double fu : u_frac) {
            const double q = qgrid.min + fq * (qgrid.max - qgrid.min);
            const double u = uquad.min + fu * (uquad.max - uquad.min);
            const cplx a = rho(q + 0.5 * u, q - 0.5 * u);
            const cplx b = std::conj(rho(q - 0.5 * u, q + 0.5 * u));
            defect = std::max(defect, std::abs(a - b));
            mag = std::max(mag, std::abs(a));
        }
    if (defect > 1e-10 * std::max(1.0, mag))
        throw ValidationError("rho_to_f: non-Hermitian input, defect " + format_double(defect));
}

void check_window(double max_edge, double max_sample, const char* op) {
    if (max_edge > 1e-9 * max_sample)
        throw ValidationError(std::string(op) + ": quadrature window too small, edge sample " +
                              format_double(max_edge) + " vs peak " + format_double(max_sample));
}

} // namespace

DensityMatrixField f_to_rho(const PhaseSamplerFn& f, double time, const UniformGrid1D& xgrid,
                            const UniformGrid1D& pquad) {
    if (!f) throw ValidationError("f_to_rho: empty sampler");
    validate_grid(xgrid, "f_to_rho x axis");
    validate_grid(pquad, "f_to_rho p quadrature");
    DensityMatrixField out;
    out.xgrid = xgrid;
    out.time = time;
    out.values.resize(xgrid.n * xgrid.n);
    std::vector<detail::RowStats> stats(xgrid.n);
    const std::int64_t rows = static_cast<std::int64_t>(xgrid.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        detail::f_to_rho_row(static_cast<std::size_t>(i), f, xgrid, pquad,
                             &out.values[static_cast<std::size_t>(i) * xgrid.n],
                             stats[static_cast<std::size_t>(i)]);
    double max_sample = 0.0, max_edge = 0.0;
    for (const auto& s : stats) {
        max_sample = std::max(max_sample, s.max_sample);
        max_edge = std::max(max_edge, s.max_edge);
    }
    check_window(max_edge, max_sample, "f_to_rho");
    const double defect = out.hermiticity_defect();
    if (defect > 1e-10)
        throw ComputeError("f_to_rho: output Hermiticity defect " + format_double(defect) +
                           " exceeds 1e-10");
    for (std::size_t i = 0; i < xgrid.n; ++i)
        if (out.at(i, i).real() < -1e-10)
            throw ValidationError("f_to_rho: negative diagonal entry; input is not a "
                                  "probability distribution");
    log_line(LogLevel::info,
             "f_to_rho: n=" + std::to_string(xgrid.n) + " trace=" + format_double(out.trace()) +
                 " hermiticity_defect=" + format_double(defect));
    return out;
}

DensityMatrixField f_to_rho(const PhaseSpaceField& f, const UniformGrid1D& xgrid,
                            const UniformGrid1D& pquad) {
    f.validate();
    return f_to_rho(bilinear_sampler(f), f.time, xgrid, pquad);
}

PhaseSpaceField rho_to_f(const MatrixSamplerFn& rho, double time, const UniformGrid1D& qgrid,
                         const UniformGrid1D& pgrid, const UniformGrid1D& uquad) {
    if (!rho) throw ValidationError("rho_to_f: empty sampler");
    validate_grid(qgrid, "rho_to_f q axis");
    validate_grid(pgrid, "rho_to_f p axis");
    validate_grid(uquad, "rho_to_f u quadrature");
    check_sampler_hermitian(rho, qgrid, uquad);
    PhaseSpaceField out;
    out.qgrid = qgrid;
    out.pgrid = pgrid;
    out.time = time;
    out.values.resize(qgrid.n * pgrid.n);
    std::vector<detail::RowStats> stats(qgrid.n);
    const std::int64_t rows = static_cast<std::int64_t>(qgrid.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        detail::rho_to_f_row(static_cast<std::size_t>(i), rho, qgrid, pgrid, uquad,
                             &out.values[static_cast<std::size_t>(i) * pgrid.n],
                             stats[static_cast<std::size_t>(i)]);
    double max_sample = 0.0, max_edge = 0.0, max_imag = 0.0;
    for (const auto& s : stats) {
        max_sample = std::max(max_sample, s.max_sample);
        max_edge = std::max(max_edge, s.max_edge);
        max_imag = std::max(max_imag, s.max_imag);
    }
    check_window(max_edge, max_sample, "rho_to_f");
    if (max_imag > 1e-10)
        throw ComputeError("rho_to_f: imaginary residue " + format_double(max_imag) +
                           " exceeds 1e-10");
    log_line(LogLevel::info, "rho_to_f: grid " + std::to_string(qgrid.n) + "x" +
                                 std::to_string(pgrid.n) +
                                 " imag_residue=" + format_double(max_imag));
    return out;
}

PhaseSpaceField rho_to_f(const DensityMatrixField& rho, const UniformGrid1D& qgrid,
                         const UniformGrid1D& pgrid, const UniformGrid1D& uquad) {
    rho.validate();
    return rho_to_f(bilinear_sampler(rho), rho.time, qgrid, pgrid, uquad);
}

PhaseSpaceField wavefunction_to_f(const WaveSamplerFn& psi, double time,
                                  const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                                  const UniformGrid1D& uquad) {
    if (!psi) throw ValidationError("wavefunction_to_f: empty sampler");
    MatrixSamplerFn rho = [psi](double x, double xp) { return psi(x) * std::conj(psi(xp)); };
    return rho_to_f(rho, time, qgrid, pgrid, uquad);
}

PhaseSpaceField wavefunction_to_f(const WaveFunctionField& psi, const UniformGrid1D& qgrid,
                                  const UniformGrid1D& pgrid, const UniformGrid1D& uquad) {
    psi.validate();
    return wavefunction_to_f(linear_sampler(psi), psi.time, qgrid, pgrid, uquad);
}

double purity(const DensityMatrixField& rho) {
    rho.validate();
    const UniformGrid1D& g = rho.xgrid;
    double acc = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < g.n; ++j)
            row += trapezoid_weight(g, j) * std::norm(rho.at(i, j));
        acc += trapezoid_weight(g, i) * row;
    }
    return acc;
}

WaveFunctionField factorize_density(const DensityMatrixField& rho, double tol) {
    if (!(tol > 0.0)) throw ValidationError("factorize_density: tolerance must be positive");
    const double pur = purity(rho); // validates rho
    if (pur < 1.0 - tol)
        throw ComputeError("not factorizable: purity " + format_double(pur) +
                           " below 1 - " + format_double(tol));
    const UniformGrid1D& g = rho.xgrid;
    std::size_t anchor = 0;
    double best = rho.at(0, 0).real();
    for (std::size_t i = 1; i < g.n; ++i)
        if (rho.at(i, i).real() > best) {
            best = rho.at(i, i).real();
            anchor = i;
        }
    if (best < 1e-12)
        throw ComputeError("factorize_density: degenerate diagonal, largest entry " +
                           format_double(best));
    WaveFunctionField psi;
    psi.xgrid = g;
    psi.time = rho.time;
    psi.values.resize(g.n);
    const double scale = 1.0 / std::sqrt(best);
    for (std::size_t i = 0; i < g.n; ++i) psi.values[i] = rho.at(i, anchor) * scale;
    double max_rho = 0.0;
    for (const cplx& v : rho.values) max_rho = std::max(max_rho, std::abs(v));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            worst = std::max(worst,
                             std::abs(rho.at(i, j) - psi.values[i] * std::conj(psi.values[j])));
    if (worst > tol * max_rho)
        throw ComputeError("not factorizable: rank-one reconstruction misses by " +
                           format_double(worst) + " against max|rho| " + format_double(max_rho));
    fix_gauge(psi, anchor);
    psi.validate();
    log_line(LogLevel::info, "factorize_density: anchor_index=" + std::to_string(anchor) +
                                 " purity=" + format_double(pur));
    return psi;
}

cplx von_neumann_residual(const MatrixSpaceTimeFn& rho, double x, double xp, double t, double h) {
    if (!rho) throw ValidationError("von_neumann_residual: empty sampler");
    if (!(h > 0.0) || !std::isfinite(h))
        throw ValidationError("von_neumann_residual: stencil step must be positive");
    const cplx c = rho(x, xp, t);
    const cplx ddt = (rho(x, xp, t + h) - rho(x, xp, t - h)) / (2.0 * h);
    const cplx dxx = (rho(x + h, xp, t) - 2.0 * c + rho(x - h, xp, t)) / (h * h);
    const cplx dyy = (rho(x, xp + h, t) - 2.0 * c + rho(x, xp - h, t)) / (h * h);
    return cplx(0.0, 1.0) * ddt + 0.5 * (dxx - dyy) - (x - xp) * c;
}

std::string kernel_F_text() {
    return "F(q,p; x,y) = (1/(2*pi)) * exp(-i*p*(x - y)) * delta((x + y)/2 - q)   "
           "[rho -> f]";
}

std::string kernel_F_inv_text() {
    return "Finv(x,y; q,p) = exp(i*p*(x - y)) * delta((x + y)/2 - q)   [f -> rho]";
}

} // namespace liouspace
