#pragma once
// Internal per-row workers shared by the OpenMP drivers (duality_maps.cpp,
// phase_flow.cpp, schrodinger_like.cpp) and the serial drivers in
// reference.cpp. All floating-point arithmetic for one output row lives
// here, in a fixed left-to-right order, so the parallel and serial drivers
// produce bitwise-identical fields. Workers must not throw: samplers are
// invoked inside OpenMP regions, and row diagnostics are returned through
// RowStats for the driver to combine and judge after the parallel loop.
#include <complex>
#include <cstddef>
#include <functional>

#include "liouspace/duality_maps.hpp"
#include "liouspace/fields.hpp"
#include "liouspace/grid.hpp"

namespace liouspace::detail {

struct RowStats {
    double max_sample = 0.0; // largest |integrand factor| met on the row
    double max_edge = 0.0;   // largest magnitude at the first/last quadrature node
    double max_imag = 0.0;   // rho_to_f: largest dropped imaginary part
};

// Fills rho(x_i, x_j) for all j: trapezoid over pquad of f((x_i+x_j)/2, p)
// e^{i p (x_i - x_j)}. row must point at xgrid.n slots.
void f_to_rho_row(std::size_t i, const PhaseSamplerFn& f, const UniformGrid1D& xgrid,
                  const UniformGrid1D& pquad, cplx* row, RowStats& stats);

// Fills f(q_i, p_j) for all j: (1/2pi) trapezoid over uquad of
// rho(q_i + u/2, q_i - u/2) e^{-i p u}. The rho samples are taken once per
// row and reused across p. row must point at pgrid.n slots.
void rho_to_f_row(std::size_t i, const MatrixSamplerFn& rho, const UniformGrid1D& qgrid,
                  const UniformGrid1D& pgrid, const UniformGrid1D& uquad, double* row,
                  RowStats& stats);

// Fills f(q_i, p_j, t) = f0(flow_backward((q_i, p_j), t)) for all j.
void propagate_distribution_row(std::size_t i, const std::function<double(double, double)>& f0,
                                double t, const UniformGrid1D& qgrid,
                                const UniformGrid1D& pgrid, double* row);

// One output sample of the propagated wave function: trapezoid over
// psi0.xgrid of G(x, x', t) psi0(x').
cplx propagate_psi_point(double x, const WaveFunctionField& psi0, double t);

} // namespace liouspace::detail
