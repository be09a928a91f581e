#pragma once
#include "duality_maps.hpp"
#include "phase_flow.hpp"
#include "schrodinger_like.hpp"

// Serial reference drivers for the row-parallel kernels. They run the same
// per-row workers as the OpenMP drivers in plain loops, so tests can require
// bitwise-equal results and the benchmark isolates the threading cost.
namespace liouspace::reference {

DensityMatrixField f_to_rho(const PhaseSamplerFn& f, double time,
                            const UniformGrid1D& xgrid, const UniformGrid1D& pquad);

PhaseSpaceField rho_to_f(const MatrixSamplerFn& rho, double time,
                         const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                         const UniformGrid1D& uquad);

PhaseSpaceField propagate_distribution(const std::function<double(double, double)>& f0,
                                       double t,
                                       const UniformGrid1D& qgrid,
                                       const UniformGrid1D& pgrid);

WaveFunctionField propagate_psi(const WaveFunctionField& psi0, double t,
                                const UniformGrid1D& xgrid_out);

} // namespace liouspace::reference
