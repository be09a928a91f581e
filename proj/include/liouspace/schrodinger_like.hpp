#pragma once
#include <functional>
#include <numbers>
#include <vector>

#include "fields.hpp"

namespace liouspace {

using WaveSpaceTimeFn = std::function<cplx(double x, double t)>;

// Wave function factor of the evolved Gaussian kernel. Exponent
//   -(t^4/2 + 2x^2 + 2t^2 x + i(4xt - 2x^2 t + 2t^3 x)) / (4(1+t^2)),
// prefactor (pi(1+t^2))^{-1/4}. Normalized for every t; solves the
// Schrodinger-like equation only up to the real residual coefficient below.
cplx psi_gaussian_raw(double x, double t);

// residual_coefficient(t) = (4 + 8t^2 + 3t^4 + t^6) / (8 (1+t^2)^2);
// phase_rhs is its negative, built from the same rational expression so the
// cancellation residual_coefficient(t) + phase_rhs(t) == 0 is exact.
double residual_coefficient(double t);
double phase_rhs(double t);

// Antiderivative of phase_rhs with phase(0) = 0:
//   -t/8 - t^3/24 - atan(t)/2 + t / (8(1+t^2)).
double phase_closed(double t);

// Accumulated gauge phase, either closed-form or tabulated by the fixed-step
// integrator. Between knots the table is interpolated by a cubic Hermite
// using the exact slope phase_rhs.
struct GaugePhase {
    enum class Kind { closed_form, ode_integrated };
    Kind kind = Kind::closed_form;
    double constant = 0.0; // phi(0)
    std::vector<double> knot_t, knot_phi;

    double value(double t) const; // throws outside the tabulated range
    double t_end() const;
};

// Fixed-step RK4 (Simpson form, the rhs does not depend on phi) from 0 to
// t_end; the final partial step lands on t_end exactly. step > 0 required.
GaugePhase phase_integrate(double t_end, double step = 1e-3);

// psi_gaussian_raw times e^{i phi(t)}; exact solution of
// i dpsi/dt = -1/2 dxx psi + x psi.
cplx psi_gaussian_gauged(double x, double t);
cplx psi_gaussian_gauged(double x, double t, const GaugePhase& phase);

// Central stencil for -1/2 dxx psi + x psi - i dpsi/dt at (x, t).
cplx schrodinger_residual(const WaveSpaceTimeFn& psi, double x, double t,
                          double hx, double ht);

// The propagator is singular as t -> 0; the identity limit is not sampled.
inline constexpr double kGreensTMin = 1e-3;
// Constant phase making G the exact unitary kernel ((2 pi i t)^{-1/2}).
inline constexpr double kGreensPrefactorPhase = -std::numbers::pi / 4.0;

// G(x,x',t) = (2 pi t)^{-1/2} e^{i[(x-x')^2/(2t) - t(x+x')/2 - t^3/24 + c]}.
cplx greens(double x, double xp, double t,
            double prefactor_phase = kGreensPrefactorPhase);

// Kernel evolving density matrices: G(x,x',t) conj(G(y,y',t)). Any constant
// prefactor phase cancels here.
cplx b_kernel(double x, double y, double xp, double yp, double t,
              double prefactor_phase = kGreensPrefactorPhase);

// psi_t(x) = integral over x' of G(x,x',t) psi0(x'), trapezoid over the input
// grid. Preconditions: t >= kGreensTMin; psi0 decayed below 1e-10 of its peak
// at the grid edges ("input not decayed"); input spacing within the chirp
// bound dx' <= pi t / (|x|_max + |x'|_max) ("chirp undersampled"). The output
// norm is checked against 1 to 1e-6 but never rescaled; the gauge anchor is
// placed at the modulus peak.
WaveFunctionField propagate_psi(const WaveFunctionField& psi0, double t,
                                const UniformGrid1D& xgrid_out);

} // namespace liouspace
