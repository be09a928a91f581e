#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "fields.hpp"
#include "phase_flow.hpp"

namespace liouspace {

struct ResidualReport {
    double max_abs = 0.0;
    double l2 = 0.0; // trapezoid-weighted
    std::vector<double> location_of_max;
    std::vector<double> stencil_steps;
    std::optional<double> convergence_order;
};

struct NegativityReport {
    double min_value = 0.0;
    PhasePoint argmin;          // ties: lowest q index, then lowest p index
    double negative_mass = 0.0; // trapezoid of max(-f, 0)
    bool classical = false;     // min_value >= -eps
};

// Direct quadrature of the evolved-Gaussian kernel
//   (1/pi) integral dp e^{-(p+t)^2 - ((x+x')/2 - p t - t^2/2)^2} e^{i p (x-x')}.
// Independent of the wave-function formulas; arbiter for their exponent.
cplx brute_force_rho(double x, double xp, double t, const UniformGrid1D& pquad);

NegativityReport negativity_scan(const PhaseSpaceField& f, double eps = 1e-12);

// n = 0: pi^{-1/4} e^{-x^2/2}; n = 1: pi^{-1/4} sqrt(2) x e^{-x^2/2}.
// Grid must capture the norm to 1e-9. Anchor at the largest real sample.
WaveFunctionField hermite_state(int n, const UniformGrid1D& xgrid);

// Compares the p-marginal of f against |psi|^2 on the shared axis; throws
// ValidationError "grid mismatch" if the axes differ.
ResidualReport marginal_check(const PhaseSpaceField& f, const WaveFunctionField& psi);

struct OrderEstimate {
    std::optional<double> order; // least-squares slope of log r vs log h
    bool saturated = false;      // some level fell below 1e-14
};

// residual_at(h) must be strictly positive ("non-positive residual");
// levels >= 2 halvings of h0.
OrderEstimate convergence_order(const std::function<double(double)>& residual_at,
                                double h0, int levels);

// Closed-form derivatives of psi_gaussian_raw, kept here so the differential
// checks do not depend on the stencils they certify.
cplx psi_raw_dx(double x, double t);
cplx psi_raw_dxx(double x, double t);
cplx psi_raw_dt(double x, double t);
// (-1/2 dxx + x - i dt) psi via the closed-form derivatives.
cplx schrodinger_residual_raw_analytic(double x, double t);
cplx schrodinger_residual_gauged_analytic(double x, double t);

// Variant of psi_gaussian_raw with t^2/2 instead of t^4/2 in the constant
// exponent term. Fails normalization for t outside {0,1}; the verification
// suite uses it to show the quadrature oracle pins the t^4/2 form.
cplx psi_gaussian_raw_t2(double x, double t);

} // namespace liouspace
