#include "liouspace/reference.hpp"

#include <vector>

#include "kernels.hpp"
#include "liouspace/errors.hpp"

// Serial twins of the OpenMP drivers. Same validation, same workers, plain
// row loop; see kernels.hpp for the bitwise-equality contract.
namespace liouspace::reference {

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
    for (std::size_t i = 0; i < xgrid.n; ++i)
        detail::f_to_rho_row(i, f, xgrid, pquad, &out.values[i * xgrid.n], stats[i]);
    double max_sample = 0.0, max_edge = 0.0;
    for (const auto& s : stats) {
        if (s.max_sample > max_sample) max_sample = s.max_sample;
        if (s.max_edge > max_edge) max_edge = s.max_edge;
    }
    if (max_edge > 1e-9 * max_sample)
        throw ValidationError("f_to_rho: quadrature window too small");
    return out;
}

PhaseSpaceField rho_to_f(const MatrixSamplerFn& rho, double time, const UniformGrid1D& qgrid,
                         const UniformGrid1D& pgrid, const UniformGrid1D& uquad) {
    if (!rho) throw ValidationError("rho_to_f: empty sampler");
    validate_grid(qgrid, "rho_to_f q axis");
    validate_grid(pgrid, "rho_to_f p axis");
    validate_grid(uquad, "rho_to_f u quadrature");
    PhaseSpaceField out;
    out.qgrid = qgrid;
    out.pgrid = pgrid;
    out.time = time;
    out.values.resize(qgrid.n * pgrid.n);
    std::vector<detail::RowStats> stats(qgrid.n);
    for (std::size_t i = 0; i < qgrid.n; ++i)
        detail::rho_to_f_row(i, rho, qgrid, pgrid, uquad, &out.values[i * pgrid.n], stats[i]);
    double max_sample = 0.0, max_edge = 0.0, max_imag = 0.0;
    for (const auto& s : stats) {
        if (s.max_sample > max_sample) max_sample = s.max_sample;
        if (s.max_edge > max_edge) max_edge = s.max_edge;
        if (s.max_imag > max_imag) max_imag = s.max_imag;
    }
    if (max_edge > 1e-9 * max_sample)
        throw ValidationError("rho_to_f: quadrature window too small");
    if (max_imag > 1e-10) throw ComputeError("rho_to_f: imaginary residue exceeds 1e-10");
    return out;
}

PhaseSpaceField propagate_distribution(const std::function<double(double, double)>& f0, double t,
                                       const UniformGrid1D& qgrid, const UniformGrid1D& pgrid) {
    if (!f0) throw ValidationError("propagate_distribution: empty sampler");
    validate_grid(qgrid, "propagate_distribution q axis");
    validate_grid(pgrid, "propagate_distribution p axis");
    PhaseSpaceField out;
    out.qgrid = qgrid;
    out.pgrid = pgrid;
    out.time = t;
    out.values.resize(qgrid.n * pgrid.n);
    for (std::size_t i = 0; i < qgrid.n; ++i)
        detail::propagate_distribution_row(i, f0, t, qgrid, pgrid, &out.values[i * pgrid.n]);
    return out;
}

WaveFunctionField propagate_psi(const WaveFunctionField& psi0, double t,
                                const UniformGrid1D& xgrid_out) {
    psi0.validate();
    validate_grid(xgrid_out, "propagate_psi output axis");
    WaveFunctionField out;
    out.xgrid = xgrid_out;
    out.time = psi0.time + t;
    out.values.resize(xgrid_out.n);
    for (std::size_t i = 0; i < xgrid_out.n; ++i)
        out.values[i] = detail::propagate_psi_point(xgrid_out.point(i), psi0, t);
    fix_gauge(out, argmax_abs(out.values));
    return out;
}

} // namespace liouspace::reference
