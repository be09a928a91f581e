#pragma once
#include <functional>
#include <string>

#include "fields.hpp"

namespace liouspace {

using PhaseSamplerFn = std::function<double(double q, double p)>;
using MatrixSamplerFn = std::function<cplx(double x, double xp)>;
using WaveSamplerFn = std::function<cplx(double x)>;
using MatrixSpaceTimeFn = std::function<cplx(double x, double xp, double t)>;

// rho(x,x') = integral over p of f((x+x')/2, p) e^{i p (x-x')}.
// The p window must reach the 1e-12 decay region of f; the transform throws
// "quadrature window too small" if |f| at a window edge exceeds 1e-9 of the
// largest sample seen. Output is asserted Hermitian (<= 1e-10), never
// symmetrized.
DensityMatrixField f_to_rho(const PhaseSamplerFn& f, double time,
                            const UniformGrid1D& xgrid, const UniformGrid1D& pquad);
DensityMatrixField f_to_rho(const PhaseSpaceField& f,
                            const UniformGrid1D& xgrid, const UniformGrid1D& pquad);

// f(q,p) = (1/2pi) integral over u of rho(q+u/2, q-u/2) e^{-i p u}.
// Hermiticity of the input is checked ("non-Hermitian input"); the result is
// real to <= 1e-10 imaginary residue, which is dropped after the check.
PhaseSpaceField rho_to_f(const MatrixSamplerFn& rho, double time,
                         const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                         const UniformGrid1D& uquad);
PhaseSpaceField rho_to_f(const DensityMatrixField& rho,
                         const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                         const UniformGrid1D& uquad);

// Same transform applied to the rank-one kernel psi(x) conj(psi(x')).
// The output is not flagged classical; run a negativity scan for that.
PhaseSpaceField wavefunction_to_f(const WaveSamplerFn& psi, double time,
                                  const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                                  const UniformGrid1D& uquad);
PhaseSpaceField wavefunction_to_f(const WaveFunctionField& psi,
                                  const UniformGrid1D& qgrid, const UniformGrid1D& pgrid,
                                  const UniformGrid1D& uquad);

// Double trapezoid of |rho(x,x')|^2: 1 for a pure state, 1/2 for an equal
// mixture of two orthonormal states.
double purity(const DensityMatrixField& rho);

// Splits a rank-one rho into psi(x) = rho(x, x*) / sqrt(rho(x*, x*)) with the
// anchor x* at the largest real diagonal entry (lowest index on ties).
// Throws ComputeError "not factorizable" when purity < 1 - tol or the
// reconstruction misses by more than tol * max|rho|, and "degenerate
// diagonal" when the whole diagonal is below 1e-12.
WaveFunctionField factorize_density(const DensityMatrixField& rho, double tol = 1e-6);

// Central stencil for i d(rho)/dt + (1/2)(dxx - dx'x') rho - (x - x') rho.
cplx von_neumann_residual(const MatrixSpaceTimeFn& rho, double x, double xp,
                          double t, double h);

// Documentation strings for the change-of-variable kernels; the transforms
// above never evaluate a delta numerically.
std::string kernel_F_text();
std::string kernel_F_inv_text();

} // namespace liouspace
